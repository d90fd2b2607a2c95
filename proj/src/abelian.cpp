#include "eqcoh/abelian.hpp"

#include "eqcoh/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

namespace {

std::vector<Int> column_vector(const IntMatrix& M, int j) {
    std::vector<Int> v(M.rows());
    for (int i = 0; i < M.rows(); ++i) v[i] = M.at(i, j);
    return v;
}

// [gens | torsion relations]: the lattice in Z^ngens whose quotient is the
// subgroup-generated-by-gens story done at the level of generator coords.
IntMatrix augmented(const AbelianPresentation& H, const IntMatrix& gens) {
    if (gens.rows() != H.ngens())
        throw std::invalid_argument("subgroup gens: wrong coordinate length");
    return gens.hconcat(H.relations());
}

IsoType cokernel_of(int ngens, const SmithForm& s) {
    IsoType t;
    t.free_rank = ngens - s.rank;
    t.torsion = s.nontrivial_factors();
    return t;
}

}  // namespace

std::string IsoType::str() const {
    std::vector<std::string> parts;
    if (free_rank == 1)
        parts.push_back("Z");
    else if (free_rank > 1)
        parts.push_back("Z^" + std::to_string(free_rank));
    for (size_t i = 0; i < torsion.size();) {
        size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        std::string p = "Z_" + torsion[i].get_str();
        if (j - i > 1) p += "^" + std::to_string(j - i);
        parts.push_back(p);
        i = j;
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

std::vector<Int> IsoType::primary_torsion() const {
    std::vector<Int> out;
    for (Int d : torsion) {
        for (Int p = 2; p * p <= d; ++p) {
            if (d % p != 0) continue;
            Int q = 1;
            while (d % p == 0) {
                d /= p;
                q *= p;
            }
            out.push_back(q);
        }
        if (d > 1) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool IsoType::same_as(const IsoType& o) const {
    return free_rank == o.free_rank && primary_torsion() == o.primary_torsion();
}

Int IsoType::order() const {
    if (free_rank > 0) return 0;
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
}

std::vector<Int> AbelianPresentation::normal_form(
    const std::vector<Int>& coords) const {
    if (static_cast<int>(coords.size()) != ngens())
        throw std::invalid_argument("normal_form: wrong length");
    std::vector<Int> out = coords;
    for (size_t i = 0; i < torsion.size(); ++i)
        out[free_rank + i] = mod_floor(out[free_rank + i], torsion[i]);
    return out;
}

std::vector<Int> AbelianPresentation::class_of(
    const std::vector<Int>& cocycle) const {
    return normal_form(basis_map.apply(cocycle));
}

bool AbelianPresentation::is_zero_class(const std::vector<Int>& coords) const {
    std::vector<Int> n = normal_form(coords);
    for (const Int& v : n)
        if (v != 0) return false;
    return true;
}

IntMatrix AbelianPresentation::relations() const {
    IntMatrix rel(ngens(), static_cast<int>(torsion.size()));
    for (size_t i = 0; i < torsion.size(); ++i)
        rel.set(free_rank + static_cast<int>(i), static_cast<int>(i),
                torsion[i]);
    return rel;
}

AbelianPresentation cohomology_at(const IntMatrix& d_in,
                                  const IntMatrix& d_out) {
    const int N = d_out.cols();
    IntMatrix din = d_in;
    if (din.cols() == 0) din = IntMatrix(N, 0);
    if (din.rows() != N)
        throw std::invalid_argument("cohomology_at: dimension mismatch");
    if (!d_out.mul(din).is_zero())
        throw std::invalid_argument("cohomology_at: d_out * d_in != 0");

    SmithForm s1 = smith_normal_form(d_out, SNF_R | SNF_RINV);
    std::vector<int> ker_cols;
    for (int j = s1.rank; j < N; ++j) ker_cols.push_back(j);
    const int k = static_cast<int>(ker_cols.size());
    IntMatrix K = s1.R.cols_subset(ker_cols);        // N x k kernel basis
    IntMatrix P = s1.Rinv.rows_subset(ker_cols);     // k x N retraction

    // Image of d_in in kernel coordinates, then its Smith form: diagonal 1
    // kills a generator, d >= 2 leaves torsion, 0 / missing leaves Z.
    IntMatrix X = P.mul(din);
    SmithForm s2 = smith_normal_form(X, SNF_L | SNF_LINV);

    std::vector<int> free_pos, tor_pos;
    std::vector<Int> torsion;
    for (int j = 0; j < k; ++j) {
        Int dj = j < static_cast<int>(s2.d.size()) ? s2.d[j] : Int(0);
        if (dj == 0)
            free_pos.push_back(j);
        else if (dj > 1) {
            tor_pos.push_back(j);
            torsion.push_back(dj);
        }
    }

    std::vector<int> pos = free_pos;
    pos.insert(pos.end(), tor_pos.begin(), tor_pos.end());

    AbelianPresentation H;
    H.free_rank = static_cast<int>(free_pos.size());
    H.torsion = std::move(torsion);
    H.basis_map = s2.L.mul(P).rows_subset(pos);
    H.representatives = K.mul(s2.Linv).cols_subset(pos);
    return H;
}

IsoType subgroup_iso_type(const AbelianPresentation& H,
                          const IntMatrix& gens) {
    return lattice_quotient(augmented(H, gens), H.relations());
}

IsoType quotient_iso_type(const AbelianPresentation& H,
                          const IntMatrix& gens) {
    IntMatrix aug = augmented(H, gens);
    return cokernel_of(H.ngens(), smith_normal_form(aug, SNF_NONE));
}

IsoType subquotient_iso_type(const AbelianPresentation& H,
                             const IntMatrix& gens_big,
                             const IntMatrix& gens_small) {
    return lattice_quotient(augmented(H, gens_big),
                            augmented(H, gens_small));
}

bool subgroup_contains(const AbelianPresentation& H, const IntMatrix& gens,
                       const std::vector<Int>& v) {
    return solve_linear(augmented(H, gens), v).has_value();
}

bool subgroups_equal(const AbelianPresentation& H, const IntMatrix& gens_a,
                     const IntMatrix& gens_b) {
    for (int j = 0; j < gens_a.cols(); ++j)
        if (!subgroup_contains(H, gens_b, column_vector(gens_a, j)))
            return false;
    for (int j = 0; j < gens_b.cols(); ++j)
        if (!subgroup_contains(H, gens_a, column_vector(gens_b, j)))
            return false;
    return true;
}

bool AbelianMap::well_defined() const {
    for (size_t i = 0; i < dom->torsion.size(); ++i) {
        std::vector<Int> img = column_vector(mat, dom->free_rank +
                                                      static_cast<int>(i));
        for (Int& v : img) v *= dom->torsion[i];
        if (!cod->is_zero_class(img)) return false;
    }
    return true;
}

std::vector<Int> AbelianMap::apply(const std::vector<Int>& coords) const {
    return cod->normal_form(mat.apply(coords));
}

IntMatrix image_gens(const AbelianMap& f) { return f.mat; }

IntMatrix kernel_gens(const AbelianMap& f) {
    IntMatrix stacked = f.mat.hconcat(f.cod->relations());
    IntMatrix K = kernel_basis(stacked);
    std::vector<int> top;
    for (int i = 0; i < f.dom->ngens(); ++i) top.push_back(i);
    return K.rows_subset(top);
}

IsoType cokernel_iso_type(const AbelianMap& f) {
    return quotient_iso_type(*f.cod, f.mat);
}

long mod_p_dim_from_integral(const IsoType& h_n, const IsoType& h_next,
                             unsigned long p) {
    long dim = h_n.free_rank;
    for (const Int& d : h_n.torsion)
        if (d % p == 0) ++dim;
    for (const Int& d : h_next.torsion)
        if (d % p == 0) ++dim;
    return dim;
}

IsoType lattice_quotient(const IntMatrix& gens_big,
                         const IntMatrix& gens_small) {
    if (gens_big.rows() != gens_small.rows())
        throw std::invalid_argument("lattice_quotient: ambient mismatch");
    SmithForm s = smith_normal_form(gens_big, SNF_L);
    const int r = s.rank;
    IntMatrix ls = s.L.mul(gens_small);
    IntMatrix Y(r, gens_small.cols());
    for (int i = 0; i < ls.rows(); ++i)
        for (const auto& [j, v] : ls.row(i)) {
            if (i >= r || v % s.d[i] != 0)
                throw std::invalid_argument(
                    "lattice_quotient: small lattice not contained in big");
            Y.set(i, j, v / s.d[i]);
        }
    SmithForm sy = smith_normal_form(Y, SNF_NONE);
    return cokernel_of(r, sy);
}

}  // namespace eqc
