// Sparse integer matrices with arbitrary-precision entries.
//
// Storage is row-major: each row keeps its nonzero entries sorted by column.
// Zero entries are never stored; mutating an entry to zero removes it.  This
// is the exchange type of the linear-algebra layer; the elimination engines
// build their own scratch structures from it.
#pragma once

#include "eqcoh/integers.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace eqc {

class IntMatrix {
public:
    using Entry = std::pair<int, Int>;  // (column, value)

    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
    // Row-major dense initializer, convenient in tests and fixtures.
    static IntMatrix from_rows(
        std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_dense(const std::vector<std::vector<Int>>& d);

    int rows() const { return nrows_; }
    int cols() const { return ncols_; }

    // Value at (i,j); zero when the entry is absent.
    const Int& at(int i, int j) const;
    void set(int i, int j, Int v);
    void add(int i, int j, const Int& v);

    const std::vector<Entry>& row(int i) const { return rows_[i]; }

    long nnz() const;
    bool is_zero() const;

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& other) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x

    // Columns restricted to `keep` (in the given order).
    IntMatrix cols_subset(const std::vector<int>& keep) const;
    // Rows restricted to `keep` (in the given order).
    IntMatrix rows_subset(const std::vector<int>& keep) const;
    // [this | other] side by side.
    IntMatrix hconcat(const IntMatrix& other) const;
    // [this ; other] stacked.
    IntMatrix vconcat(const IntMatrix& other) const;
    IntMatrix negated() const;

    std::vector<std::vector<Int>> to_dense() const;

    bool operator==(const IntMatrix& other) const;
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    // Largest |entry|, as a printable diagnostic.
    Int max_abs() const;

private:
    int nrows_ = 0, ncols_ = 0;
    std::vector<std::vector<Entry>> rows_;
};

}  // namespace eqc
