#pragma once

// Group cohomology H^n(G; M) for a finite group G and a matrix module M,
// computed from the cochain complex Hom_G(F_*, M) of a free resolution
// (the normalized bar resolution by default).  Cocycles given as explicit
// functions on tuples of group elements can be located as coordinates in
// the canonical presentation, and restriction maps along subgroup
// inclusions are realized on explicit cochains.

#include <map>
#include <memory>
#include <vector>

#include "eqcoh/abelian.hpp"
#include "eqcoh/complex.hpp"
#include "eqcoh/gmodule.hpp"
#include "eqcoh/group.hpp"
#include "eqcoh/resolution.hpp"

namespace eqc {

class GroupCohomology {
public:
    // Bar-resolution model.  Degrees 0 .. max_degree-1 are computable
    // (the top resolution degree only supplies the outgoing differential).
    // The module is stored by value, so temporaries are safe to pass.
    explicit GroupCohomology(GModule M, int max_degree = 4);
    // Same, over a custom resolution (e.g. the periodic one for cyclic
    // groups).  R must resolve Z over the group ring of M's group.
    GroupCohomology(Resolution R, GModule M);

    const FinGroup& group() const { return *M_.G; }
    const GModule& module() const { return M_; }
    const Resolution& resolution() const { return R_; }
    // Length of the underlying resolution; valid cohomology degrees are
    // 0 .. max_degree()-1.
    int max_degree() const { return R_.max_degree(); }
    int cochain_dim(int n) const;

    const AbelianPresentation& at(int n);
    // Canonical coordinates of the class of a cocycle, given in cochain
    // coordinates (generator-major: index = generator * rank + coordinate).
    // Throws if the vector is not a cocycle.
    std::vector<Int> class_of(int n, const std::vector<Int>& cocycle);
    // A cocycle (cochain coordinates) representing the class with the given
    // canonical coordinates.
    std::vector<Int> representative(int n, const std::vector<Int>& coords);

    ComplexSolver& solver() { return *solver_; }

private:
    GModule M_;
    Resolution R_;
    std::vector<int> dims_;
    std::unique_ptr<ComplexSolver> solver_;

    void check_degree(int n) const;
};

// One-shot H^n(G; M).
AbelianPresentation group_cohomology(const FinGroup& G, const GModule& M,
                                     int n);

// H^n(P; Z_phi) for the rank-1 module twisted by a sign character.
AbelianPresentation twisted_point_cohomology(const FinGroup& P,
                                             const SignHom& phi, int n);

// A cochain/cocycle as an explicit function on tuples of group elements,
// with values in a module.  Normalized convention: tuples containing the
// identity evaluate to zero (assignments to them are ignored).
struct Cocycle {
    const GModule* M = nullptr;
    int degree = 0;
    std::map<std::vector<int>, std::vector<Int>> values;

    Cocycle(const GModule& mod, int deg) : M(&mod), degree(deg) {}

    // Set the value on a tuple of group element indices.
    void set(const std::vector<int>& tuple, std::vector<Int> value);
    // Value on a tuple (zero vector if unset or containing the identity).
    std::vector<Int> value(const std::vector<int>& tuple) const;
    // Flatten to cochain coordinates of the bar model.
    std::vector<Int> cochain_vector() const;
};

// Canonical coordinates of [c] in H.at(c.degree); H must be a bar model
// over the same module.  Throws if c is not a cocycle.
std::vector<Int> cocycle_class(const Cocycle& c, GroupCohomology& H);
// Convenience: builds a bar model of just-sufficient length internally.
std::vector<Int> cocycle_class(const Cocycle& c);

// The map H^n(G; M) -> H^n(H; M|_H) induced by a subgroup inclusion,
// realized by restricting representative cochains to tuples from the
// subgroup.  big must be a bar model of M over G, small a bar model of
// restrict_module(M, H, incl) over H.  The returned map's presentations
// point into big/small, which must outlive it.
AbelianMap restriction_map(GroupCohomology& big, GroupCohomology& small,
                           const std::vector<int>& incl, int n);

}  // namespace eqc
