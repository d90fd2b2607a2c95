#pragma once

// Free resolutions of Z over the integral group ring of a finite group,
// and the cochain complexes Hom_G(F_*, M) they induce.
//
// Chain modules are free *right* modules over the group ring.  A matrix
// over the group ring acts on columns: d(e_c) = sum_r e_r * a_{rc}, so
// composition of maps is the ordinary matrix product with entries
// multiplied in the order a_{rm} * b_{mc}.

#include <map>
#include <vector>

#include "eqcoh/complex.hpp"
#include "eqcoh/gmodule.hpp"
#include "eqcoh/group.hpp"
#include "eqcoh/intmatrix.hpp"

namespace eqc {

// Element of the integral group ring: finite formal sum of group elements.
class ZGElem {
public:
    ZGElem() = default;
    explicit ZGElem(int g, Int coeff = 1) { add(g, std::move(coeff)); }

    void add(int g, const Int& coeff);
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }

    ZGElem& operator+=(const ZGElem& o);
    ZGElem operator-() const;
    // Product in the group ring of G (needed to resolve group products).
    ZGElem mul(const ZGElem& o, const FinGroup& G) const;
    bool operator==(const ZGElem& o) const { return terms_ == o.terms_; }

private:
    std::map<int, Int> terms_;  // group element index -> nonzero coefficient
};

// Sum of all group elements (the norm element).
ZGElem norm_element(const FinGroup& G);

// Matrix over the group ring of a fixed finite group.
class ZGMatrix {
public:
    ZGMatrix() : rows_(0), cols_(0) {}
    ZGMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<ZGElem>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ZGElem& entry(int r, int c) const { return a_[r][c]; }
    void add_term(int r, int c, int g, const Int& coeff) {
        a_[r][c].add(g, coeff);
    }
    void set(int r, int c, ZGElem e) { a_[r][c] = std::move(e); }

    bool is_zero() const;
    // Ordinary matrix product; entry products taken as a_{rm} * b_{mc}.
    ZGMatrix mul(const ZGMatrix& b, const FinGroup& G) const;

    // Forget the module structure: each group-ring entry becomes an
    // |G| x |G| integer block via the right regular representation, so the
    // result is the matrix of the same map on underlying free Z-modules.
    // Basis of the free right module of rank n: e_i * g, indexed i*|G| + g.
    IntMatrix flatten(const FinGroup& G) const;

private:
    int rows_, cols_;
    std::vector<std::vector<ZGElem>> a_;
};

// A partial free resolution ... -> F_2 -> F_1 -> F_0 -> Z -> 0 by finitely
// generated free right modules over the group ring.  diff[p] : F_p -> F_{p-1}
// for p = 1..max_degree; ranks[p] = rank of F_p.
struct Resolution {
    const FinGroup* G = nullptr;
    std::vector<int> ranks;     // size max_degree + 1
    std::vector<ZGMatrix> diff; // diff[0] unused placeholder; diff[p] for p>=1

    int max_degree() const { return static_cast<int>(ranks.size()) - 1; }
    // Checks shapes and d od = 0 over the group ring.
    void validate() const;
    // Integer matrix of diff[p] on underlying free Z-modules.
    IntMatrix flattened_boundary(int p) const;
};

// Index bookkeeping for tuples of non-identity group elements.
class BarIndexer {
public:
    BarIndexer(const FinGroup& G, int length);

    int length() const { return length_; }
    long tuple_count() const { return count_; }
    // Tuple entries are group element indices (all != identity).
    long index_of(const std::vector<int>& tuple) const;
    std::vector<int> tuple_at(long index) const;

private:
    const FinGroup* G_;
    int length_;
    long count_;
    std::vector<int> nonid_;     // non-identity elements in index order
    std::vector<int> pos_;       // group element -> position in nonid_
};

// Normalized bar resolution up to homological degree max_degree:
// F_p is free on tuples [g_1 | ... | g_p] of non-identity elements,
// so ranks are (|G| - 1)^p.  Faces where a product collapses to the
// identity are dropped by normalization.
Resolution bar_resolution(const FinGroup& G, int max_degree);

// The standard 2-periodic resolution for a cyclic group generated by gen:
// all ranks 1, differentials alternating (gen - 1) and the norm element.
Resolution periodic_cyclic_resolution(const FinGroup& G, int gen,
                                      int max_degree);

// Cochain complex Hom_G(F_*, M) for a module M over the same group.
// A degree-p cochain assigns an element of M to each generator of F_p;
// coordinates are tuple-major: index = generator_index * M.rank + coord.
// The resulting complex has dims[p] = ranks[p] * M.rank for p <= max_degree.
Complex hom_complex(const Resolution& R, const GModule& M);

}  // namespace eqc
