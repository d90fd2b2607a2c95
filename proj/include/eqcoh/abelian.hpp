// Finitely generated abelian groups presented in canonical form, the
// cohomology-of-a-pair-of-differentials construction that produces them, and
// subgroup / quotient / map utilities on top.
//
// A presentation fixes generators g_1..g_f (free) followed by t_1..t_k
// (torsion, orders ascending under divisibility).  Elements are integer
// coordinate vectors in that generator order; torsion coordinates are
// understood modulo their order.
#pragma once

#include "eqcoh/intmatrix.hpp"

#include <string>
#include <vector>

namespace eqc {

// Isomorphism type of a finitely generated abelian group.
struct IsoType {
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors >= 2, ascending

    // "0", "Z", "Z^2 + Z_2 + Z_4", ... free part first.
    std::string str() const;
    // Multiset of prime powers in the torsion (torsion decomposed into
    // primary cyclic pieces), sorted.  Two torsion lists describe isomorphic
    // groups iff these agree.
    std::vector<Int> primary_torsion() const;
    bool same_as(const IsoType& o) const;
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    // Number of elements; 0 encodes infinite.
    Int order() const;
};

struct AbelianPresentation {
    int free_rank = 0;
    std::vector<Int> torsion;  // ascending divisibility chain, entries >= 2

    // Rows: one per generator (free rows first).  Maps an ambient cocycle
    // coordinate vector (length N) to canonical coordinates.
    IntMatrix basis_map;
    // Columns: one ambient representative cocycle per generator.
    IntMatrix representatives;

    int ngens() const { return free_rank + static_cast<int>(torsion.size()); }
    int ambient_dim() const { return representatives.rows(); }
    IsoType iso() const { return IsoType{free_rank, torsion}; }

    // Reduce torsion coordinates into [0, order).
    std::vector<Int> normal_form(const std::vector<Int>& coords) const;
    // Canonical coordinates of an ambient cocycle vector.
    std::vector<Int> class_of(const std::vector<Int>& cocycle) const;
    bool is_zero_class(const std::vector<Int>& coords) const;
    // Relation matrix: ngens x ntorsion, order of t_i in the t_i slot.
    IntMatrix relations() const;
};

// Cohomology ker(d_out) / im(d_in) of consecutive differentials
//     Z^M --d_in--> Z^N --d_out--> Z^K      (requires d_out * d_in = 0).
// Dense-elimination path for moderate N; the reduction in complex.hpp feeds
// large complexes through this on small remainders only.
AbelianPresentation cohomology_at(const IntMatrix& d_in,
                                  const IntMatrix& d_out);

// ---- subgroups ----------------------------------------------------------
// A subgroup of a presented group H is given by generator columns in
// canonical coordinates.  Torsion relations of H are accounted for
// internally.

IsoType subgroup_iso_type(const AbelianPresentation& H, const IntMatrix& gens);
// H / <gens>
IsoType quotient_iso_type(const AbelianPresentation& H, const IntMatrix& gens);
// <gens_big> / <gens_small>; gens_small must generate a subgroup of
// <gens_big>.
IsoType subquotient_iso_type(const AbelianPresentation& H,
                             const IntMatrix& gens_big,
                             const IntMatrix& gens_small);
bool subgroup_contains(const AbelianPresentation& H, const IntMatrix& gens,
                       const std::vector<Int>& v);
bool subgroups_equal(const AbelianPresentation& H, const IntMatrix& gens_a,
                     const IntMatrix& gens_b);

// ---- homomorphisms ------------------------------------------------------

// Homomorphism between presented groups, as a matrix on canonical
// coordinates (cod.ngens() x dom.ngens()).
struct AbelianMap {
    const AbelianPresentation* dom = nullptr;
    const AbelianPresentation* cod = nullptr;
    IntMatrix mat;

    // Torsion generators must land in classes killed by their order.
    bool well_defined() const;
    std::vector<Int> apply(const std::vector<Int>& coords) const;
};

// Generators (canonical coordinates of the codomain) of the image.
IntMatrix image_gens(const AbelianMap& f);
// Generators (canonical coordinates of the domain) of the kernel.
IntMatrix kernel_gens(const AbelianMap& f);
IsoType cokernel_iso_type(const AbelianMap& f);

// ---- universal coefficients ---------------------------------------------

// dim_{F_p} of (H_n tensor F_p) + Tor(H_{n+1}, F_p) given integral
// isomorphism types; matches the dimension of mod-p cohomology in degree n
// when H_n, H_{n+1} are the integral cohomologies.
long mod_p_dim_from_integral(const IsoType& h_n, const IsoType& h_next,
                             unsigned long p);

// Quotient L1/L2 of lattices spanned by the given generator columns
// (L2 must be contained in L1).
IsoType lattice_quotient(const IntMatrix& gens_big,
                         const IntMatrix& gens_small);

}  // namespace eqc
