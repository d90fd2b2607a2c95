#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqcoh/resolution.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "eqcoh/complex.hpp"
#include "eqcoh/gmodule.hpp"
#include "eqcoh/group.hpp"

using eqc::BarIndexer;
using eqc::Complex;
using eqc::ComplexSolver;
using eqc::FinGroup;
using eqc::GModule;
using eqc::Int;
using eqc::IntMatrix;
using eqc::Resolution;
using eqc::ZGElem;
using eqc::ZGMatrix;

namespace {

// View the underlying integer chain complex F_top -> ... -> F_0 as a cochain
// complex (degree i holds F_{top-i}) so the solver computes its homology.
Complex reversed_chain(const Resolution& R) {
    Complex C;
    const int top = R.max_degree();
    const int n = R.G->order();
    for (int i = 0; i <= top; ++i) C.dims.push_back(R.ranks[top - i] * n);
    for (int i = 0; i < top; ++i)
        C.mats.push_back(R.flattened_boundary(top - i));
    return C;
}

ZGMatrix random_zg_matrix(std::mt19937& rng, const FinGroup& G, int rows,
                          int cols) {
    std::uniform_int_distribution<int> nterms(0, 2), elem(0, G.order() - 1),
        coeff(-3, 3);
    ZGMatrix A(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (int t = nterms(rng); t > 0; --t)
                A.add_term(r, c, elem(rng), coeff(rng));
    return A;
}

}  // namespace

TEST_CASE("group ring arithmetic") {
    FinGroup Z4 = eqc::cyclic_group(4);
    const int g = Z4.element("C");

    ZGElem a(g, 1);
    a.add(Z4.id, -1);  // g - 1
    ZGElem nrm = eqc::norm_element(Z4);
    CHECK(a.mul(nrm, Z4).is_zero());
    CHECK(nrm.mul(a, Z4).is_zero());
    CHECK_FALSE(a.is_zero());

    // Cancellation.
    ZGElem b(g, 2);
    b.add(g, -2);
    CHECK(b.is_zero());

    // (g - 1)(g + 1) = g^2 - 1 in Z[Z4].
    ZGElem c(g, 1);
    c.add(Z4.id, 1);
    ZGElem prod = a.mul(c, Z4);
    ZGElem expect(Z4.element("C2"), 1);
    expect.add(Z4.id, -1);
    CHECK(prod == expect);
}

TEST_CASE("flattening is multiplicative") {
    FinGroup D3 = eqc::dihedral_group(3);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        ZGMatrix A = random_zg_matrix(rng, D3, 2, 3);
        ZGMatrix B = random_zg_matrix(rng, D3, 3, 2);
        IntMatrix lhs = A.mul(B, D3).flatten(D3);
        IntMatrix rhs = A.flatten(D3).mul(B.flatten(D3));
        CHECK(lhs == rhs);
    }
    // Identity flattens to the identity.
    ZGMatrix I(2, 2);
    I.add_term(0, 0, D3.id, 1);
    I.add_term(1, 1, D3.id, 1);
    CHECK(I.flatten(D3) == IntMatrix::identity(12));
}

TEST_CASE("bar resolution ranks and differentials") {
    FinGroup Z2 = eqc::cyclic_group(2);
    Resolution R2 = eqc::bar_resolution(Z2, 4);
    CHECK(R2.ranks == std::vector<int>{1, 1, 1, 1, 1});
    R2.validate();

    FinGroup Z3 = eqc::cyclic_group(3);
    Resolution R3 = eqc::bar_resolution(Z3, 4);
    CHECK(R3.ranks == std::vector<int>{1, 2, 4, 8, 16});
    R3.validate();

    FinGroup D3 = eqc::dihedral_group(3);
    Resolution RD3 = eqc::bar_resolution(D3, 4);
    CHECK(RD3.ranks == std::vector<int>{1, 5, 25, 125, 625});
    RD3.validate();

    for (auto make : {+[] { return eqc::cyclic_group(4); },
                      +[] { return eqc::cyclic_group(6); },
                      +[] { return eqc::dihedral_group(2); },
                      +[] { return eqc::dihedral_group(4); }}) {
        FinGroup G = make();
        eqc::bar_resolution(G, 4).validate();
    }
    FinGroup D6 = eqc::dihedral_group(6);
    eqc::bar_resolution(D6, 3).validate();
}

TEST_CASE("periodic resolution for cyclic groups") {
    FinGroup Z4 = eqc::cyclic_group(4);
    Resolution P = eqc::periodic_cyclic_resolution(Z4, Z4.element("C"), 5);
    CHECK(P.ranks == std::vector<int>(6, 1));
    P.validate();
    // d1 = C - 1, d2 = 1 + C + C^2 + C^3.
    ZGElem d1(Z4.element("C"), 1);
    d1.add(Z4.id, -1);
    CHECK(P.diff[1].entry(0, 0) == d1);
    CHECK(P.diff[2].entry(0, 0) == eqc::norm_element(Z4));
    CHECK(P.diff[3].entry(0, 0) == d1);

    // C^3 also generates; C^2 does not.
    eqc::periodic_cyclic_resolution(Z4, Z4.element("C3"), 3).validate();
    CHECK_THROWS_AS(
        eqc::periodic_cyclic_resolution(Z4, Z4.element("C2"), 3),
        std::invalid_argument);
    FinGroup Z6 = eqc::cyclic_group(6);
    CHECK_THROWS_AS(
        eqc::periodic_cyclic_resolution(Z6, Z6.element("C2"), 3),
        std::invalid_argument);
}

TEST_CASE("flattened resolutions are exact") {
    struct Case {
        FinGroup G;
        int max;
    };
    std::vector<Case> cases;
    cases.push_back({eqc::cyclic_group(2), 5});
    cases.push_back({eqc::cyclic_group(3), 5});
    cases.push_back({eqc::cyclic_group(4), 5});
    cases.push_back({eqc::cyclic_group(6), 4});
    cases.push_back({eqc::dihedral_group(1), 5});
    cases.push_back({eqc::dihedral_group(2), 4});
    cases.push_back({eqc::dihedral_group(3), 4});
    cases.push_back({eqc::dihedral_group(4), 4});
    for (const auto& cs : cases) {
        CAPTURE(cs.G.order());
        CAPTURE(cs.max);
        Resolution R = eqc::bar_resolution(cs.G, cs.max);
        Complex C = reversed_chain(R);
        C.validate();
        ComplexSolver solver(std::move(C));
        // Homology in degree 0 is Z (augmentation), zero in between.
        const auto& h0 = solver.cohomology(cs.max);
        CHECK(h0.free_rank == 1);
        CHECK(h0.torsion.empty());
        for (int p = 1; p <= cs.max - 1; ++p) {
            CAPTURE(p);
            CHECK(solver.cohomology(cs.max - p).iso().is_zero());
        }
    }

    // Periodic resolutions of cyclic groups, same property.
    for (int n : {2, 3, 4, 6}) {
        FinGroup G = eqc::cyclic_group(n);
        Resolution R =
            eqc::periodic_cyclic_resolution(G, G.element("C"), 5);
        Complex C = reversed_chain(R);
        C.validate();
        ComplexSolver solver(std::move(C));
        const auto& h0 = solver.cohomology(5);
        CHECK(h0.free_rank == 1);
        CHECK(h0.torsion.empty());
        for (int p = 1; p <= 4; ++p) {
            CAPTURE(n);
            CAPTURE(p);
            CHECK(solver.cohomology(5 - p).iso().is_zero());
        }
    }
}

TEST_CASE("flattened resolutions are exact: largest groups") {
    {
        FinGroup D4 = eqc::dihedral_group(4);
        Resolution R = eqc::bar_resolution(D4, 5);
        ComplexSolver solver(reversed_chain(R));
        CHECK(solver.cohomology(5).free_rank == 1);
        CHECK(solver.cohomology(5).torsion.empty());
        for (int p = 1; p <= 4; ++p) {
            CAPTURE(p);
            CHECK(solver.cohomology(5 - p).iso().is_zero());
        }
    }
    {
        FinGroup D6 = eqc::dihedral_group(6);
        Resolution R = eqc::bar_resolution(D6, 4);
        ComplexSolver solver(reversed_chain(R));
        CHECK(solver.cohomology(4).free_rank == 1);
        CHECK(solver.cohomology(4).torsion.empty());
        for (int p = 1; p <= 3; ++p) {
            CAPTURE(p);
            CHECK(solver.cohomology(4 - p).iso().is_zero());
        }
    }
}

TEST_CASE("bar indexer round trips") {
    FinGroup D3 = eqc::dihedral_group(3);
    BarIndexer ix(D3, 3);
    CHECK(ix.tuple_count() == 125);
    for (long i = 0; i < ix.tuple_count(); ++i) {
        std::vector<int> t = ix.tuple_at(i);
        CHECK(static_cast<int>(t.size()) == 3);
        for (int e : t) CHECK(e != D3.id);
        CHECK(ix.index_of(t) == i);
    }
    CHECK_THROWS(ix.index_of({D3.id, 1, 2}));
    CHECK_THROWS(ix.index_of({1, 2}));
    BarIndexer ix0(D3, 0);
    CHECK(ix0.tuple_count() == 1);
    CHECK(ix0.index_of({}) == 0);
    CHECK(ix0.tuple_at(0).empty());
}

TEST_CASE("hom complex against hand-computed differentials") {
    FinGroup Z2 = eqc::cyclic_group(2);
    Resolution R = eqc::bar_resolution(Z2, 4);

    // Trivial coefficients: differentials alternate 0 and multiplication
    // by 2, starting with 0.
    GModule triv = eqc::trivial_module(Z2);
    Complex Ct = eqc::hom_complex(R, triv);
    Ct.validate();
    CHECK(Ct.dims == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(Ct.mats[0].at(0, 0) == 0);
    CHECK(Ct.mats[1].at(0, 0) == 2);
    CHECK(Ct.mats[2].at(0, 0) == 0);
    CHECK(Ct.mats[3].at(0, 0) == 2);

    // Sign coefficients: the roles of the two differentials swap.
    GModule sgn = eqc::sign_module(Z2, eqc::rotation_sign(Z2));
    Complex Cs = eqc::hom_complex(R, sgn);
    Cs.validate();
    CHECK(Cs.mats[0].at(0, 0) == 2);
    CHECK(Cs.mats[1].at(0, 0) == 0);
    CHECK(Cs.mats[2].at(0, 0) == 2);
    CHECK(Cs.mats[3].at(0, 0) == 0);
}

TEST_CASE("hom complexes are complexes") {
    FinGroup Z4 = eqc::cyclic_group(4);
    Resolution R4 = eqc::bar_resolution(Z4, 4);
    GModule sgn = eqc::sign_module(Z4, eqc::rotation_sign(Z4));
    Complex C = eqc::hom_complex(R4, sgn);
    C.validate();
    CHECK(C.dims == std::vector<int>{1, 3, 9, 27, 81});

    FinGroup D3 = eqc::dihedral_group(3);
    Resolution RD = eqc::bar_resolution(D3, 3);
    eqc::hom_complex(RD, eqc::trivial_module(D3)).validate();
    // Rank-6 coefficients scale every dimension by 6.
    GModule reg = eqc::regular_module(D3);
    Complex Cr = eqc::hom_complex(RD, reg);
    Cr.validate();
    CHECK(Cr.dims == std::vector<int>{6, 30, 150, 750});

    // Group mismatch is refused.
    CHECK_THROWS(eqc::hom_complex(RD, eqc::trivial_module(Z4)));
}
