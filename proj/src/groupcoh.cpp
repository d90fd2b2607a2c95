#include "eqcoh/groupcoh.hpp"

#include <stdexcept>

namespace eqc {

GroupCohomology::GroupCohomology(GModule M, int max_degree)
    : M_(std::move(M)) {
    if (max_degree < 1)
        throw std::invalid_argument("GroupCohomology: need max_degree >= 1");
    R_ = bar_resolution(*M_.G, max_degree);
    Complex C = hom_complex(R_, M_);
    dims_ = C.dims;
    solver_ = std::make_unique<ComplexSolver>(std::move(C));
}

GroupCohomology::GroupCohomology(Resolution R, GModule M)
    : M_(std::move(M)), R_(std::move(R)) {
    if (R_.G != M_.G)
        throw std::invalid_argument("GroupCohomology: group mismatch");
    Complex C = hom_complex(R_, M_);
    dims_ = C.dims;
    solver_ = std::make_unique<ComplexSolver>(std::move(C));
}

void GroupCohomology::check_degree(int n) const {
    // The top resolution degree has no outgoing differential, so its
    // cohomology cannot be trusted; refuse rather than overcount.
    if (n < 0 || n >= max_degree())
        throw std::out_of_range("GroupCohomology: degree out of range");
}

int GroupCohomology::cochain_dim(int n) const {
    if (n < 0 || n > max_degree())
        throw std::out_of_range("GroupCohomology: degree out of range");
    return dims_[n];
}

const AbelianPresentation& GroupCohomology::at(int n) {
    check_degree(n);
    return solver_->cohomology(n);
}

std::vector<Int> GroupCohomology::class_of(int n,
                                           const std::vector<Int>& cocycle) {
    check_degree(n);
    if (static_cast<int>(cocycle.size()) != dims_[n])
        throw std::invalid_argument("GroupCohomology: cochain size mismatch");
    return solver_->class_of(n, to_sparse(cocycle));
}

std::vector<Int> GroupCohomology::representative(
    int n, const std::vector<Int>& coords) {
    const AbelianPresentation& H = at(n);
    if (static_cast<int>(coords.size()) != H.ngens())
        throw std::invalid_argument("GroupCohomology: coordinate size");
    std::vector<Int> rep(dims_[n]);
    for (int g = 0; g < H.ngens(); ++g) {
        if (eqc::is_zero(coords[g])) continue;
        for (const auto& [i, v] : solver_->representative(n, g))
            rep[i] += coords[g] * v;
    }
    return rep;
}

AbelianPresentation group_cohomology(const FinGroup& G, const GModule& M,
                                     int n) {
    if (M.G != &G)
        throw std::invalid_argument("group_cohomology: group mismatch");
    if (n < 0) throw std::invalid_argument("group_cohomology: degree");
    GroupCohomology H(M, n + 1);
    return H.at(n);
}

AbelianPresentation twisted_point_cohomology(const FinGroup& P,
                                             const SignHom& phi, int n) {
    GModule Zphi = sign_module(P, phi);
    GroupCohomology H(Zphi, n + 1);
    return H.at(n);
}

// ---------------------------------------------------------------------------
// Cocycle

void Cocycle::set(const std::vector<int>& tuple, std::vector<Int> value) {
    if (static_cast<int>(tuple.size()) != degree)
        throw std::invalid_argument("Cocycle: tuple length mismatch");
    if (static_cast<int>(value.size()) != M->rank)
        throw std::invalid_argument("Cocycle: value size mismatch");
    for (int g : tuple) {
        if (g < 0 || g >= M->G->order())
            throw std::invalid_argument("Cocycle: bad group element");
        if (g == M->G->id) return;  // normalized: forced to zero
    }
    bool nonzero = false;
    for (const Int& v : value)
        if (!eqc::is_zero(v)) {
            nonzero = true;
            break;
        }
    if (nonzero)
        values[tuple] = std::move(value);
    else
        values.erase(tuple);
}

std::vector<Int> Cocycle::value(const std::vector<int>& tuple) const {
    auto it = values.find(tuple);
    if (it != values.end()) return it->second;
    return std::vector<Int>(M->rank);
}

std::vector<Int> Cocycle::cochain_vector() const {
    BarIndexer ix(*M->G, degree);
    std::vector<Int> w(ix.tuple_count() * M->rank);
    for (const auto& [tuple, val] : values) {
        const long t = ix.index_of(tuple);
        for (int j = 0; j < M->rank; ++j) w[t * M->rank + j] = val[j];
    }
    return w;
}

std::vector<Int> cocycle_class(const Cocycle& c, GroupCohomology& H) {
    const GModule& HM = H.module();
    if (!c.M || c.M->G != HM.G || c.M->rank != HM.rank || c.M->act != HM.act)
        throw std::invalid_argument("cocycle_class: module mismatch");
    return H.class_of(c.degree, c.cochain_vector());
}

std::vector<Int> cocycle_class(const Cocycle& c) {
    GroupCohomology H(*c.M, c.degree + 1);
    return cocycle_class(c, H);
}

// ---------------------------------------------------------------------------
// Restriction

AbelianMap restriction_map(GroupCohomology& big, GroupCohomology& small,
                           const std::vector<int>& incl, int n) {
    const FinGroup& G = big.group();
    const FinGroup& H = small.group();
    if (static_cast<int>(incl.size()) != H.order())
        throw std::invalid_argument("restriction_map: bad inclusion");
    if (!is_homomorphism(H, G, incl) || incl[H.id] != G.id)
        throw std::invalid_argument("restriction_map: not a homomorphism");
    if (small.module().rank != big.module().rank)
        throw std::invalid_argument("restriction_map: module rank mismatch");
    // Both sides must be bar models for tuple restriction to make sense.
    const int expect_big = big.cochain_dim(1);
    const int expect_small = small.cochain_dim(1);
    if (expect_big != (G.order() - 1) * big.module().rank ||
        expect_small != (H.order() - 1) * small.module().rank)
        throw std::invalid_argument("restriction_map: need bar models");

    const AbelianPresentation& dom = big.at(n);
    const AbelianPresentation& cod = small.at(n);
    const int mr = big.module().rank;
    BarIndexer ixG(G, n), ixH(H, n);

    IntMatrix mat(cod.ngens(), dom.ngens());
    for (int g = 0; g < dom.ngens(); ++g) {
        std::vector<Int> unit(dom.ngens());
        unit[g] = 1;
        const std::vector<Int> z = big.representative(n, unit);
        std::vector<Int> w(ixH.tuple_count() * mr);
        for (long t = 0; t < ixH.tuple_count(); ++t) {
            std::vector<int> tup = ixH.tuple_at(t);
            for (int& e : tup) e = incl[e];
            const long gt = ixG.index_of(tup);
            for (int j = 0; j < mr; ++j) w[t * mr + j] = z[gt * mr + j];
        }
        const std::vector<Int> cls = small.class_of(n, w);
        for (int r = 0; r < cod.ngens(); ++r) mat.set(r, g, cls[r]);
    }
    AbelianMap f;
    f.dom = &dom;
    f.cod = &cod;
    f.mat = std::move(mat);
    return f;
}

}  // namespace eqc
