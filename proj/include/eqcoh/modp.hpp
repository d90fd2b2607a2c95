// Small dense linear algebra over F_p (p prime, fits in unsigned long).
// Used for mod-p cohomology dimensions and for filtration computations that
// only need dimensions, where exact integer arithmetic would be overkill.
#pragma once

#include "eqcoh/intmatrix.hpp"

#include <vector>

namespace eqc {

using ModPVec = std::vector<unsigned long>;

// Entries reduced into [0, p).
ModPVec modp_reduce_vector(const std::vector<Int>& v, unsigned long p);

// Rank of the span of the given vectors (each of equal length).
long modp_span_rank(std::vector<ModPVec> rows, unsigned long p);

long modp_rank(const IntMatrix& A, unsigned long p);

// Basis of {x : A x = 0 over F_p}, one vector (length A.cols()) per basis
// element.
std::vector<ModPVec> modp_kernel(const IntMatrix& A, unsigned long p);

// dim_{F_p} ker(d_out) / im(d_in) for consecutive differentials reduced
// mod p.
long modp_cohomology_dim(const IntMatrix& d_in, const IntMatrix& d_out,
                         unsigned long p);

// dim(U cap W) for subspaces spanned by the given vectors.
long modp_intersection_dim(const std::vector<ModPVec>& u,
                           const std::vector<ModPVec>& w, unsigned long p);

}  // namespace eqc
