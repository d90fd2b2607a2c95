#include "eqcoh/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

namespace {
const Int kZero = 0;

// Locate column j in a sorted entry row.
std::vector<IntMatrix::Entry>::const_iterator find_col(
    const std::vector<IntMatrix::Entry>& r, int j) {
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const IntMatrix::Entry& e, int col) { return e.first < col; });
    return it;
}
}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : nrows_(rows), ncols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("IntMatrix: negative dimension");
    rows_.resize(rows);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[i].emplace_back(i, 1);
    return m;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows.begin()->size()) : 0;
    IntMatrix m(nr, nc);
    int i = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != nc)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        int j = 0;
        for (long v : r) {
            if (v != 0) m.rows_[i].emplace_back(j, v);
            ++j;
        }
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Int>>& d) {
    int nr = static_cast<int>(d.size());
    int nc = nr ? static_cast<int>(d[0].size()) : 0;
    IntMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(d[i].size()) != nc)
            throw std::invalid_argument("IntMatrix: ragged dense input");
        for (int j = 0; j < nc; ++j)
            if (!eqc::is_zero(d[i][j])) m.rows_[i].emplace_back(j, d[i][j]);
    }
    return m;
}

const Int& IntMatrix::at(int i, int j) const {
    const auto& r = rows_[i];
    auto it = find_col(r, j);
    if (it != r.end() && it->first == j) return it->second;
    return kZero;
}

void IntMatrix::set(int i, int j, Int v) {
    auto& r = rows_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const Entry& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) {
        if (eqc::is_zero(v))
            r.erase(it);
        else
            it->second = std::move(v);
    } else if (!eqc::is_zero(v)) {
        r.insert(it, Entry(j, std::move(v)));
    }
}

void IntMatrix::add(int i, int j, const Int& v) {
    if (eqc::is_zero(v)) return;
    auto& r = rows_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const Entry& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) {
        it->second += v;
        if (eqc::is_zero(it->second)) r.erase(it);
    } else {
        r.insert(it, Entry(j, v));
    }
}

long IntMatrix::nnz() const {
    long n = 0;
    for (const auto& r : rows_) n += static_cast<long>(r.size());
    return n;
}

bool IntMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(ncols_, nrows_);
    // Counting pass keeps the per-row inserts amortized O(1) and sorted.
    std::vector<int> cnt(ncols_, 0);
    for (const auto& r : rows_)
        for (const auto& e : r) ++cnt[e.first];
    for (int j = 0; j < ncols_; ++j) t.rows_[j].reserve(cnt[j]);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& e : rows_[i]) t.rows_[e.first].emplace_back(i, e.second);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (ncols_ != other.nrows_)
        throw std::invalid_argument("IntMatrix::mul: dimension mismatch");
    IntMatrix out(nrows_, other.ncols_);
    std::vector<Int> acc(other.ncols_, 0);
    std::vector<int> touched;
    for (int i = 0; i < nrows_; ++i) {
        touched.clear();
        for (const auto& [k, a] : rows_[i]) {
            for (const auto& [j, b] : other.rows_[k]) {
                if (eqc::is_zero(acc[j])) touched.push_back(j);
                acc[j] += a * b;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int j : touched) {
            if (!eqc::is_zero(acc[j])) out.rows_[i].emplace_back(j, acc[j]);
            acc[j] = 0;
        }
    }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != ncols_)
        throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    std::vector<Int> y(nrows_, 0);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, a] : rows_[i]) y[i] += a * x[j];
    return y;
}

IntMatrix IntMatrix::cols_subset(const std::vector<int>& keep) const {
    std::vector<int> pos(ncols_, -1);
    for (int t = 0; t < static_cast<int>(keep.size()); ++t) pos[keep[t]] = t;
    IntMatrix out(nrows_, static_cast<int>(keep.size()));
    for (int i = 0; i < nrows_; ++i) {
        for (const auto& [j, v] : rows_[i])
            if (pos[j] >= 0) out.rows_[i].emplace_back(pos[j], v);
        std::sort(out.rows_[i].begin(), out.rows_[i].end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
    }
    return out;
}

IntMatrix IntMatrix::rows_subset(const std::vector<int>& keep) const {
    IntMatrix out(static_cast<int>(keep.size()), ncols_);
    for (int t = 0; t < static_cast<int>(keep.size()); ++t)
        out.rows_[t] = rows_[keep[t]];
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
    if (nrows_ != other.nrows_)
        throw std::invalid_argument("IntMatrix::hconcat: row mismatch");
    IntMatrix out(nrows_, ncols_ + other.ncols_);
    for (int i = 0; i < nrows_; ++i) {
        out.rows_[i] = rows_[i];
        for (const auto& [j, v] : other.rows_[i])
            out.rows_[i].emplace_back(j + ncols_, v);
    }
    return out;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& other) const {
    if (ncols_ != other.ncols_)
        throw std::invalid_argument("IntMatrix::vconcat: column mismatch");
    IntMatrix out(nrows_ + other.nrows_, ncols_);
    for (int i = 0; i < nrows_; ++i) out.rows_[i] = rows_[i];
    for (int i = 0; i < other.nrows_; ++i) out.rows_[nrows_ + i] = other.rows_[i];
    return out;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix out = *this;
    for (auto& r : out.rows_)
        for (auto& e : r) e.second = -e.second;
    return out;
}

std::vector<std::vector<Int>> IntMatrix::to_dense() const {
    std::vector<std::vector<Int>> d(nrows_, std::vector<Int>(ncols_, 0));
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i]) d[i][j] = v;
    return d;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return nrows_ == other.nrows_ && ncols_ == other.ncols_ &&
           rows_ == other.rows_;
}

Int IntMatrix::max_abs() const {
    Int m = 0;
    for (const auto& r : rows_)
        for (const auto& e : r)
            if (mpz_cmpabs(e.second.get_mpz_t(), m.get_mpz_t()) > 0)
                m = abs(e.second);
    return m;
}

}  // namespace eqc
