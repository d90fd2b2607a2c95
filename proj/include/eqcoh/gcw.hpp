// Finite-group CW complexes given by orbit data, their expansion to plain
// CW complexes, and homotopy-quotient ("Borel") cohomology with module
// coefficients.
//
// A complex is described per dimension by orbits of cells.  Each orbit
// carries the subgroup fixing its representative cell pointwise; the orbit
// then consists of one cell per coset of that subgroup.  Boundaries are
// recorded on representatives only, as formal integer combinations of group
// translates of lower representatives:
//
//     d(e_c) = sum_r a_{rc} . e_r,   a_{rc} in Z[G] acting on the LEFT,
//
// so the translate g.e_c has boundary sum_r (g a_{rc}) . e_r.  (This is a
// left-module convention; the resolution layer uses right modules, and the
// two meet in the double complex below via the inverse-element dictionary.)
//
// The equivariant cohomology of X with coefficients in a module M is the
// cohomology of Hom_G(F_* (x) C_*(X), M), where F_* is a free resolution
// (bar resolution here) and the tensor product carries the diagonal action.
// Because F_* is free, each F_p (x) C_q is free on (resolution generator,
// expanded cell) pairs, which turns the whole computation into plain
// integer linear algebra.  The resolution degree p induces a filtration of
// the total complex by "supported in resolution degree >= p"; its images in
// cohomology are the F^p subgroups reported by FilteredCohomology.
#pragma once

#include "eqcoh/abelian.hpp"
#include "eqcoh/complex.hpp"
#include "eqcoh/gmodule.hpp"
#include "eqcoh/group.hpp"
#include "eqcoh/intmatrix.hpp"
#include "eqcoh/resolution.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace eqc {

// One orbit of cells: the subgroup fixing the representative cell pointwise
// (all element indices, not just generators) and a display label.
struct GCWCell {
    std::vector<int> stab;
    std::string label;
};

struct GCWComplex {
    const FinGroup* G = nullptr;
    // cells[d] = orbits of d-cells, d = 0 .. dim()
    std::vector<std::vector<GCWCell>> cells;
    // boundary[d] : degree d -> d-1 on orbit representatives, left
    // convention as above; boundary[0] is an unused placeholder.
    std::vector<ZGMatrix> boundary;

    int dim() const { return static_cast<int>(cells.size()) - 1; }
    int orbit_count(int d) const { return static_cast<int>(cells[d].size()); }
    // Structural checks: group set, shapes consistent, stabilizers are
    // subgroups.  The homological checks (dd = 0, equivariance) live in
    // expand_to_cw, which every computation path goes through.
    void validate() const;
};

// The underlying plain CW complex of a GCWComplex: one cell per stabilizer
// coset of each orbit, boundary over Z, and the group action as a cell
// permutation per degree.  Orientations of translated cells are defined as
// the translated orientations (well defined because stabilizers fix cells
// pointwise), which makes the action permutation matrices sign-free.
struct ExpandedCW {
    const FinGroup* G = nullptr;
    // cell_ids[d][x] = (orbit index, canonical coset representative); cells
    // are ordered orbit-major, cosets by ascending representative.
    std::vector<std::vector<std::pair<int, int>>> cell_ids;
    std::vector<int> dims;
    // bnd[d] : C_d -> C_{d-1} (rows = (d-1)-cells, columns = d-cells);
    // bnd[0] is a 0 x dims[0] placeholder.
    std::vector<IntMatrix> bnd;
    // act[d][g][x] = index of g . x
    std::vector<std::vector<std::vector<int>>> act;
    // coset_cell[d][orbit][g] = index of the cell of `orbit` whose coset
    // contains group element g.
    std::vector<std::vector<std::vector<int>>> coset_cell;

    int dim() const { return static_cast<int>(dims.size()) - 1; }
    // Index of the cell of `orbit` whose coset contains group element g.
    int cell_index(int d, int orbit, int g) const;
    // Cochain complex Hom(C_*, Z) (transpose boundaries).
    Complex cochain() const;
    long euler_characteristic() const;
};

// Expands X and verifies dd = 0 and equivariance of the boundary on the
// expansion (together these validate the orbit-level boundary data,
// including its compatibility with stabilizers).  Throws on failure.
ExpandedCW expand_to_cw(const GCWComplex& X);

// H^q(X; Z) of the underlying space, q = 0 .. dim.
std::vector<IsoType> expansion_cohomology(const ExpandedCW& E);

// The action of G on H^q(X; Z) of the underlying space, as a module over
// the acting group: action(g) is induced by pulling back cochains along
// x -> g^{-1} . x, which makes g -> action(g) a homomorphism.  Throws if
// H^q has torsion (modules here are free over Z).
GModule induced_module_on_cohomology(const GCWComplex& X, int q);

// A subgroup of cohomology classes: generator columns in the canonical
// coordinates of the ambient presentation, plus its isomorphism type.
struct ClassSubgroup {
    IntMatrix gens;
    IsoType iso;
};

// H^n of the homotopy quotient together with the resolution-degree
// filtration F^0 = total >= F^1 >= ... >= F^{n+1} = 0.
struct FilteredCohomology {
    int degree = 0;
    AbelianPresentation total;
    std::vector<ClassSubgroup> filtration;  // index p = 0 .. degree + 1
};

// Equivariant cohomology engine for one (X, M) pair.  Degrees 0..top are
// computable; asking beyond `top` rebuilds with a deeper resolution.
class BorelCohomology {
  public:
    // Keeps its own copies of X and M; the group must outlive this object.
    BorelCohomology(GCWComplex X, GModule M, int top);

    int top_degree() const { return top_; }
    const GCWComplex& space() const { return X_; }
    const GModule& module() const { return M_; }
    const ExpandedCW& expansion() const { return E_; }

    const AbelianPresentation& at(int n);
    FilteredCohomology filtered(int n);

    // Total-complex layout at degree n: blocks ordered by ascending
    // resolution degree p = 0..n, the p block pairing resolution
    // generators of degree p with cells of dimension n - p.
    int dim_total(int n) const;
    int block_size(int n, int p) const;
    int block_offset(int n, int p) const;
    // Coordinate of (resolution generator, expanded cell, module
    // coordinate) within the degree-n total complex.
    int total_index(int n, int p, int gen, int cell, int coord) const;

    // The assembled total complex (kept for mod-p rank computations and
    // for building maps out of the total complex).
    const Complex& total_complex() const { return total_; }

    ComplexSolver& solver() { return *solver_; }

  private:
    void build(int top);
    void require_degree(int n);

    GCWComplex X_;
    GModule M_;
    int top_ = 0;
    Resolution R_;
    ExpandedCW E_;
    Complex total_;
    std::vector<int> dims_total_;            // degree 0 .. top_ + 1
    std::vector<std::vector<int>> offsets_;  // offsets_[n][p], p = 0..n+1
    std::unique_ptr<ComplexSolver> solver_;
};

// One-shot convenience: H^n with its filtration.
FilteredCohomology borel_filtered_cohomology(const GCWComplex& X,
                                             const GModule& M, int n);

// The complex with the listed orbits removed (drop[d] = orbit indices in
// dimension d; missing trailing degrees mean "drop nothing").  The removed
// orbits must be closed under the boundary, i.e. form a subcomplex; throws
// otherwise.  The result represents the quotient X / A, so its "cells" need
// not form an honest complex (boundaries may lose endpoints); all
// computations remain valid for relative cohomology.
GCWComplex quotient_complex(const GCWComplex& X,
                            const std::vector<std::vector<int>>& drop);

// H^n of the pair (X, A) with A the subcomplex spanned by drop, computed
// from the quotient complex.
AbelianPresentation relative_borel_cohomology(
    const GCWComplex& X, const std::vector<std::vector<int>>& drop,
    const GModule& M, int n);

// Result of checking H^n(X) = H^n(point) + (reduced part) for a complex
// with a fully fixed 0-cell: restriction to the fixed cell must be onto the
// point cohomology, and the kernel accounts exactly for the rest.
struct SplitReport {
    bool ok = false;
    IsoType total;
    IsoType point;
    IsoType reduced;
};

// Throws if X has no 0-cell orbit fixed by the whole group.
SplitReport fixed_point_split_check(const GCWComplex& X, const GModule& M,
                                    int n);

// JSON serialization.  The group is embedded (elements + multiplication
// table) so files are self-describing; loading binds the complex to the
// caller's group object after verifying it matches the embedded one.
// Stabilizers are written as full element lists and read as generating
// sets (closed under multiplication on load).
std::string gcw_to_json(const GCWComplex& X);
GCWComplex gcw_from_json(const std::string& json_text, const FinGroup& G);
GCWComplex gcw_from_json_file(const std::string& path, const FinGroup& G);

}  // namespace eqc
