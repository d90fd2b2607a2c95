// Modules over Z[G]: finite-rank free Z-modules with a matrix action.
//
// Storage convention: action(g) obeys the homomorphism law
//     action(g) * action(h) = action(g h).
// Cochain formulas in this project evaluate modules on the right; a
// right-module evaluation m.g is computed as action(g^{-1}) * m, so a module
// that is naturally a right module stores action(g) = (act by g^{-1}).
#pragma once

#include "eqcoh/group.hpp"
#include "eqcoh/intmatrix.hpp"

namespace eqc {

struct GModule {
    const FinGroup* G = nullptr;
    int rank = 0;
    std::vector<IntMatrix> act;  // indexed by group element

    const IntMatrix& action(int g) const { return act[g]; }
    // m.g in right-module evaluations
    std::vector<Int> right_apply(int g, const std::vector<Int>& m) const {
        return act[G->inverse(g)].apply(m);
    }
    // homomorphism law, identity, shapes; throws on violation
    void validate() const;
};

// Validated constructor from a full action table.
GModule make_module(const FinGroup& G, std::vector<IntMatrix> act);

GModule trivial_module(const FinGroup& G, int rank = 1);
// Rank 1, g acts by phi(g).
GModule sign_module(const FinGroup& G, const SignHom& phi);
// Multiplies each action matrix by phi(g); rank unchanged.
GModule twist_module(const GModule& M, const SignHom& phi);
// Contragredient: action'(g) = transpose(action(g^{-1})).
GModule dual_module(const GModule& M);
// Restriction along a subgroup inclusion (incl from subgroup_of).
GModule restrict_module(const GModule& M, const FinGroup& H,
                        const std::vector<int>& incl);
// Z[G] acting on itself by right translation, in the element basis.
GModule regular_module(const FinGroup& G);

// {"rank": r, "action": {"label": [[row...]...], ...}}: one matrix per
// non-identity element (the identity may be listed but must be I).  The
// homomorphism law is validated on load.
GModule module_from_json(const FinGroup& G, const std::string& json_text);

}  // namespace eqc
