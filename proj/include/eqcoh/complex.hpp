// Cochain complexes of free Z-modules and the unit-pivot reduction engine.
//
// The engine removes pairs of generators connected by a +-1 differential
// entry (a discrete-Morse / Gaussian elimination move), keeping a replayable
// trace of every elimination.  The trace yields, for any degree n:
//   - projection of an original cocycle to the reduced complex (phi),
//   - lifting of a reduced cocycle back to original coordinates (psi),
// which together let us name cohomology classes of very large complexes
// while only ever running dense Smith normal form on the small remainder.
//
// For exact cocycle *lattices* (not just classes) the two-term variant is
// used: reducing a single matrix as a complex [source -> target] makes psi
// restrict to an isomorphism of kernel lattices, giving a saturated kernel
// basis of a large sparse matrix.
#pragma once

#include "eqcoh/abelian.hpp"
#include "eqcoh/intmatrix.hpp"

#include <memory>
#include <vector>

namespace eqc {

// Sparse integer vector, entries sorted by index.
using SparseVec = std::vector<std::pair<int, Int>>;

SparseVec to_sparse(const std::vector<Int>& v);
std::vector<Int> to_dense(const SparseVec& v, int n);

struct Complex {
    std::vector<int> dims;        // dims[d], d = 0 .. top_degree
    std::vector<IntMatrix> mats;  // mats[d] : Z^dims[d] -> Z^dims[d+1]

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    // Shape checks and d(d+1) o d(d) = 0; throws on failure.
    void validate() const;
};

struct ReduceOptions {
    // Unit pivots whose Markowitz fill score exceeds this are deferred; if
    // nothing cheaper remains the reduction stops and the remainder goes to
    // dense Smith form.
    long fill_cap = 50000;
};

struct ReduceStats {
    long eliminations = 0;
    long compactions = 0;
    std::vector<int> reduced_dims;
};

class ComplexSolver {
  public:
    explicit ComplexSolver(Complex c, ReduceOptions opt = {});
    ~ComplexSolver();
    ComplexSolver(ComplexSolver&&) noexcept;
    ComplexSolver& operator=(ComplexSolver&&) noexcept;

    int top_degree() const;
    int original_dim(int n) const;
    int reduced_dim(int n) const;

    // Cohomology at degree n; computed on first use, cached.
    const AbelianPresentation& cohomology(int n);

    // Canonical coordinates of the class of an integer cocycle, given in
    // original degree-n coordinates.  Throws if z is not a cocycle.
    std::vector<Int> class_of(int n, const SparseVec& z);

    // Original-coordinate representative cocycle of canonical generator g.
    SparseVec representative(int n, int g);

    // Basis of the full cocycle lattice ker(d^n) in original coordinates
    // (runs a separate two-term reduction of the original differential).
    std::vector<SparseVec> cocycle_basis(int n);

    // Differential between reduced degrees (m -> m+1), for inspection.
    const IntMatrix& reduced_matrix(int m) const;
    // Original indices of the surviving degree-n coordinates.
    const std::vector<int>& alive_indices(int n) const;

    const ReduceStats& stats() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Basis of the kernel lattice {x : A x = 0} of a large sparse matrix,
// columns as sparse vectors.  Exact (saturated) like kernel_basis, but
// reduction-backed.
std::vector<SparseVec> sparse_kernel_basis(const IntMatrix& A);

}  // namespace eqc
