// Smith normal form over Z with optional unimodular transforms, plus the
// kernel/solve helpers built on it.  The elimination here works on a dense
// working copy with smallest-pivot selection and is intended for matrices of
// moderate size; large sparse complexes are shrunk first by the unit-pivot
// reduction in complex.hpp, which only ever hands small remainders to this
// code.
#pragma once

#include "eqcoh/intmatrix.hpp"

#include <optional>
#include <vector>

namespace eqc {

// Which transforms smith_normal_form should accumulate.
enum SnfFlags : unsigned {
    SNF_NONE = 0,
    SNF_L = 1u << 0,
    SNF_R = 1u << 1,
    SNF_LINV = 1u << 2,
    SNF_RINV = 1u << 3,
};

// L * A * R = diag(d) with L, R unimodular.  d is the full diagonal of
// length min(rows, cols): positive invariant factors in divisibility order
// (each dividing the next), then zeros.
struct SmithForm {
    std::vector<Int> d;
    int rank = 0;  // number of nonzero diagonal entries
    IntMatrix L, R, Linv, Rinv;

    // Invariant factors >= 2 (the torsion part of coker A).
    std::vector<Int> nontrivial_factors() const {
        std::vector<Int> t;
        for (const Int& v : d)
            if (v > 1) t.push_back(v);
        return t;
    }
};

SmithForm smith_normal_form(const IntMatrix& A,
                            unsigned flags = SNF_L | SNF_R);

// Columns form a basis of {x : A x = 0} as a lattice (which is automatically
// saturated in Z^cols).  Dense-elimination path; see complex.hpp for the
// large sparse path.
IntMatrix kernel_basis(const IntMatrix& A);

// One integer solution of A x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& A,
                                             const std::vector<Int>& b);

}  // namespace eqc
