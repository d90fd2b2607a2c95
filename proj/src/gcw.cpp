#include "eqcoh/gcw.hpp"

#include "eqcoh/groupcoh.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqc {

namespace {

// Smallest element index in the coset g . <stab>.
int canonical_rep(const FinGroup& G, int g, const std::vector<int>& stab) {
    int best = G.order();
    for (int h : stab) best = std::min(best, G.mult(g, h));
    return best;
}

IntMatrix permutation_matrix(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    IntMatrix P(n, n);
    for (int x = 0; x < n; ++x) P.set(perm[x], x, 1);
    return P;
}

}  // namespace

void GCWComplex::validate() const {
    if (!G) throw std::invalid_argument("GCWComplex: no group");
    if (cells.empty())
        throw std::invalid_argument("GCWComplex: no cell degrees");
    if (boundary.size() != cells.size())
        throw std::invalid_argument(
            "GCWComplex: boundary/cells degree count mismatch");
    int n = G->order();
    for (int d = 0; d <= dim(); ++d) {
        for (const GCWCell& c : cells[d]) {
            if (c.stab.empty())
                throw std::invalid_argument(
                    "GCWComplex: empty stabilizer for " + c.label);
            for (int h : c.stab)
                if (h < 0 || h >= n)
                    throw std::invalid_argument(
                        "GCWComplex: stabilizer element out of range in " +
                        c.label);
            if (!is_subgroup(*G, c.stab))
                throw std::invalid_argument(
                    "GCWComplex: stabilizer of " + c.label +
                    " is not a subgroup");
        }
        if (d == 0) continue;
        const ZGMatrix& B = boundary[d];
        if (B.rows() != orbit_count(d - 1) || B.cols() != orbit_count(d))
            throw std::invalid_argument("GCWComplex: boundary shape");
        for (int r = 0; r < B.rows(); ++r)
            for (int c = 0; c < B.cols(); ++c)
                for (const auto& [g, coeff] : B.entry(r, c).terms())
                    if (g < 0 || g >= n)
                        throw std::invalid_argument(
                            "GCWComplex: boundary group element out of range");
    }
}

int ExpandedCW::cell_index(int d, int orbit, int g) const {
    return coset_cell.at(d).at(orbit).at(g);
}

Complex ExpandedCW::cochain() const {
    Complex c;
    c.dims = dims;
    for (int d = 0; d + 1 <= dim(); ++d) c.mats.push_back(bnd[d + 1].transpose());
    return c;
}

long ExpandedCW::euler_characteristic() const {
    long chi = 0;
    for (int d = 0; d <= dim(); ++d) chi += (d % 2 == 0 ? 1L : -1L) * dims[d];
    return chi;
}

ExpandedCW expand_to_cw(const GCWComplex& X) {
    X.validate();
    const FinGroup& G = *X.G;
    int ng = G.order();
    int D = X.dim();

    ExpandedCW E;
    E.G = X.G;
    E.cell_ids.resize(D + 1);
    E.dims.resize(D + 1);
    E.bnd.resize(D + 1);
    E.act.resize(D + 1);
    E.coset_cell.resize(D + 1);

    for (int d = 0; d <= D; ++d) {
        E.coset_cell[d].resize(X.orbit_count(d));
        for (int c = 0; c < X.orbit_count(d); ++c) {
            const std::vector<int>& stab = X.cells[d][c].stab;
            std::set<int> canons;
            for (int g = 0; g < ng; ++g)
                canons.insert(canonical_rep(G, g, stab));
            E.coset_cell[d][c].assign(ng, -1);
            for (int r : canons) {
                int idx = static_cast<int>(E.cell_ids[d].size());
                E.cell_ids[d].push_back({c, r});
                for (int h : stab) E.coset_cell[d][c][G.mult(r, h)] = idx;
            }
        }
        E.dims[d] = static_cast<int>(E.cell_ids[d].size());
    }

    E.bnd[0] = IntMatrix(0, E.dims[0]);
    for (int d = 1; d <= D; ++d) {
        IntMatrix B(E.dims[d - 1], E.dims[d]);
        for (int x = 0; x < E.dims[d]; ++x) {
            auto [c, r] = E.cell_ids[d][x];
            for (int c2 = 0; c2 < X.orbit_count(d - 1); ++c2)
                for (const auto& [g, coeff] : X.boundary[d].entry(c2, c).terms())
                    B.add(E.coset_cell[d - 1][c2][G.mult(r, g)], x, coeff);
        }
        E.bnd[d] = std::move(B);
    }

    for (int d = 0; d <= D; ++d) {
        E.act[d].assign(ng, std::vector<int>(E.dims[d], -1));
        for (int g = 0; g < ng; ++g)
            for (int x = 0; x < E.dims[d]; ++x) {
                auto [c, r] = E.cell_ids[d][x];
                E.act[d][g][x] = E.coset_cell[d][c][G.mult(g, r)];
            }
    }

    for (int d = 2; d <= D; ++d)
        if (!E.bnd[d - 1].mul(E.bnd[d]).is_zero())
            throw std::invalid_argument(
                "expand_to_cw: boundary of boundary is nonzero in degree " +
                std::to_string(d));
    // Boundary must commute with every group translation; this is also
    // what makes the orbit-level boundary data independent of the choice
    // of coset representatives.
    for (int d = 1; d <= D; ++d)
        for (int g = 0; g < ng; ++g) {
            IntMatrix Pd = permutation_matrix(E.act[d][g]);
            IntMatrix Pd1 = permutation_matrix(E.act[d - 1][g]);
            if (Pd1.mul(E.bnd[d]) != E.bnd[d].mul(Pd))
                throw std::invalid_argument(
                    "expand_to_cw: boundary is not equivariant (degree " +
                    std::to_string(d) + ", element " + G.label(g) + ")");
        }
    return E;
}

std::vector<IsoType> expansion_cohomology(const ExpandedCW& E) {
    Complex c = E.cochain();
    std::vector<IsoType> out;
    for (int q = 0; q <= E.dim(); ++q) {
        IntMatrix d_in = q > 0 ? c.mats[q - 1] : IntMatrix(c.dims[0], 0);
        IntMatrix d_out =
            q < E.dim() ? c.mats[q] : IntMatrix(0, c.dims[q]);
        out.push_back(cohomology_at(d_in, d_out).iso());
    }
    return out;
}

GModule induced_module_on_cohomology(const GCWComplex& X, int q) {
    ExpandedCW E = expand_to_cw(X);
    if (q < 0 || q > E.dim())
        throw std::out_of_range("induced_module_on_cohomology: degree");
    const FinGroup& G = *X.G;
    ComplexSolver S(E.cochain());
    const AbelianPresentation& H = S.cohomology(q);
    if (!H.torsion.empty())
        throw std::invalid_argument(
            "induced_module_on_cohomology: cohomology has torsion");
    int r = H.free_rank;
    std::vector<IntMatrix> act;
    for (int g = 0; g < G.order(); ++g) {
        IntMatrix A(r, r);
        for (int k = 0; k < r; ++k) {
            // Pull back the k-th generator's representative along
            // x -> g^{-1} . x; the pullback permutes cochain coordinates
            // by the forward action on cells.
            SparseVec w;
            for (const auto& [idx, v] : S.representative(q, k))
                w.push_back({E.act[q][g][idx], v});
            std::sort(w.begin(), w.end());
            std::vector<Int> cls = S.class_of(q, w);
            for (int i = 0; i < r; ++i)
                if (!is_zero(cls[i])) A.set(i, k, cls[i]);
        }
        act.push_back(std::move(A));
    }
    // make_module re-checks the homomorphism law, which here also
    // certifies that pullback and class extraction composed correctly.
    return make_module(G, std::move(act));
}

BorelCohomology::BorelCohomology(GCWComplex X, GModule M, int top)
    : X_(std::move(X)), M_(std::move(M)) {
    if (X_.G != M_.G)
        throw std::invalid_argument("BorelCohomology: group mismatch");
    if (top < 0) throw std::invalid_argument("BorelCohomology: negative degree");
    E_ = expand_to_cw(X_);
    build(top);
}

int BorelCohomology::dim_total(int n) const {
    if (n < 0 || n > top_ + 1)
        throw std::out_of_range("BorelCohomology: dim_total degree");
    return dims_total_[n];
}

int BorelCohomology::block_size(int n, int p) const {
    if (n < 0 || n > top_ + 1 || p < 0 || p > n + 1)
        throw std::out_of_range("BorelCohomology: block");
    int q = n - p;
    if (q < 0 || q > E_.dim()) return 0;
    return R_.ranks[p] * E_.dims[q] * M_.rank;
}

int BorelCohomology::block_offset(int n, int p) const {
    if (n < 0 || n > top_ + 1 || p < 0 || p > n + 1)
        throw std::out_of_range("BorelCohomology: block");
    return offsets_[n][p];
}

int BorelCohomology::total_index(int n, int p, int gen, int cell,
                                 int coord) const {
    int q = n - p;
    if (q < 0 || q > E_.dim() || gen < 0 || gen >= R_.ranks[p] || cell < 0 ||
        cell >= E_.dims[q] || coord < 0 || coord >= M_.rank)
        throw std::out_of_range("BorelCohomology: total_index");
    return block_offset(n, p) + (gen * E_.dims[q] + cell) * M_.rank + coord;
}

void BorelCohomology::build(int top) {
    top_ = top;
    const FinGroup& G = *X_.G;
    R_ = bar_resolution(G, top + 1);
    int mr = M_.rank;
    int DX = E_.dim();

    dims_total_.assign(top + 2, 0);
    offsets_.assign(top + 2, {});
    for (int n = 0; n <= top + 1; ++n) {
        offsets_[n].assign(n + 2, 0);
        int acc = 0;
        for (int p = 0; p <= n; ++p) {
            offsets_[n][p] = acc;
            int q = n - p;
            if (q <= DX) acc += R_.ranks[p] * E_.dims[q] * mr;
        }
        offsets_[n][n + 1] = acc;
        dims_total_[n] = acc;
    }

    Complex T;
    T.dims = dims_total_;
    for (int d = 0; d <= top; ++d) {
        IntMatrix Dm(dims_total_[d + 1], dims_total_[d]);
        for (int p = 0; p <= d; ++p) {
            int q = d - p;
            if (q < 0 || q > DX) continue;
            int Nq = E_.dims[q];
            if (R_.ranks[p] * Nq * mr == 0) continue;

            // Resolution direction: precomposing with the resolution
            // differential moves a group-ring coefficient g onto the
            // evaluated cell (as g . x) and onto the value (as the right
            // action of g, i.e. the matrix of g^{-1}).
            const ZGMatrix& A = R_.diff[p + 1];
            for (int r = 0; r < A.rows(); ++r)
                for (int c = 0; c < A.cols(); ++c)
                    for (const auto& [g, coeff] : A.entry(r, c).terms()) {
                        const IntMatrix& Ai = M_.action(G.inverse(g));
                        for (int x = 0; x < Nq; ++x) {
                            int gx = E_.act[q][g][x];
                            int rowbase =
                                offsets_[d + 1][p + 1] + (c * Nq + x) * mr;
                            int colbase =
                                offsets_[d][p] + (r * Nq + gx) * mr;
                            for (int i = 0; i < mr; ++i)
                                for (const auto& [j, v] : Ai.row(i))
                                    Dm.add(rowbase + i, colbase + j,
                                           coeff * v);
                        }
                    }

            // Cell direction: precomposing with the cell boundary, with
            // the sign that makes the two directions anticommute.
            if (q + 1 <= DX && E_.dims[q + 1] > 0) {
                const IntMatrix& B = E_.bnd[q + 1];
                int Nq1 = E_.dims[q + 1];
                Int sign = (p % 2 == 0) ? 1 : -1;
                for (int j = 0; j < R_.ranks[p]; ++j)
                    for (int x = 0; x < Nq; ++x)
                        for (const auto& [y, v] : B.row(x)) {
                            int rowbase =
                                offsets_[d + 1][p] + (j * Nq1 + y) * mr;
                            int colbase = offsets_[d][p] + (j * Nq + x) * mr;
                            for (int t = 0; t < mr; ++t)
                                Dm.add(rowbase + t, colbase + t, sign * v);
                        }
            }
        }
        T.mats.push_back(std::move(Dm));
    }
    T.validate();
    total_ = T;
    solver_ = std::make_unique<ComplexSolver>(std::move(T));
}

void BorelCohomology::require_degree(int n) {
    if (n < 0) throw std::out_of_range("BorelCohomology: negative degree");
    if (n > top_) build(n);
}

const AbelianPresentation& BorelCohomology::at(int n) {
    require_degree(n);
    return solver_->cohomology(n);
}

FilteredCohomology BorelCohomology::filtered(int n) {
    require_degree(n);
    FilteredCohomology F;
    F.degree = n;
    F.total = at(n);
    int ngen = F.total.ngens();
    std::vector<SparseVec> K = solver_->cocycle_basis(n);
    int nk = static_cast<int>(K.size());
    for (int p = 0; p <= n + 1; ++p) {
        IntMatrix gens;
        if (p == 0) {
            gens = IntMatrix::identity(ngen);
        } else {
            // Cocycles supported in resolution degrees >= p are exactly
            // the combinations of the cocycle basis whose coordinates
            // below the block-p offset vanish.
            int low = block_offset(n, p);
            IntMatrix Klow(low, nk);
            for (int j = 0; j < nk; ++j)
                for (const auto& [idx, v] : K[j])
                    if (idx < low) Klow.set(idx, j, v);
            std::vector<SparseVec> W = sparse_kernel_basis(Klow);
            gens = IntMatrix(ngen, static_cast<int>(W.size()));
            for (int wc = 0; wc < static_cast<int>(W.size()); ++wc) {
                std::vector<Int> z(dim_total(n));
                for (const auto& [j, wv] : W[wc])
                    for (const auto& [idx, v] : K[j]) z[idx] += wv * v;
                std::vector<Int> cls = solver_->class_of(n, to_sparse(z));
                for (int i = 0; i < ngen; ++i)
                    if (!is_zero(cls[i])) gens.set(i, wc, cls[i]);
            }
        }
        IsoType iso = subgroup_iso_type(F.total, gens);
        F.filtration.push_back({std::move(gens), std::move(iso)});
    }
    return F;
}

FilteredCohomology borel_filtered_cohomology(const GCWComplex& X,
                                             const GModule& M, int n) {
    BorelCohomology B(X, M, n);
    return B.filtered(n);
}

GCWComplex quotient_complex(const GCWComplex& X,
                            const std::vector<std::vector<int>>& drop) {
    X.validate();
    int D = X.dim();
    if (static_cast<int>(drop.size()) > D + 1)
        throw std::invalid_argument("quotient_complex: too many degrees");
    std::vector<std::vector<bool>> dropped(D + 1);
    for (int d = 0; d <= D; ++d) dropped[d].assign(X.orbit_count(d), false);
    for (int d = 0; d < static_cast<int>(drop.size()); ++d)
        for (int c : drop[d]) {
            if (c < 0 || c >= X.orbit_count(d))
                throw std::invalid_argument(
                    "quotient_complex: orbit index out of range");
            dropped[d][c] = true;
        }
    // The dropped orbits must form a subcomplex: boundaries of dropped
    // cells may only touch dropped cells.
    for (int d = 1; d <= D; ++d)
        for (int c = 0; c < X.orbit_count(d); ++c) {
            if (!dropped[d][c]) continue;
            for (int r = 0; r < X.orbit_count(d - 1); ++r)
                if (!X.boundary[d].entry(r, c).is_zero() && !dropped[d - 1][r])
                    throw std::invalid_argument(
                        "quotient_complex: dropped cells are not closed "
                        "under the boundary (" + X.cells[d][c].label + ")");
        }

    GCWComplex Q;
    Q.G = X.G;
    Q.cells.resize(D + 1);
    Q.boundary.resize(D + 1);
    std::vector<std::vector<int>> newidx(D + 1);
    for (int d = 0; d <= D; ++d) {
        newidx[d].assign(X.orbit_count(d), -1);
        for (int c = 0; c < X.orbit_count(d); ++c) {
            if (dropped[d][c]) continue;
            newidx[d][c] = static_cast<int>(Q.cells[d].size());
            Q.cells[d].push_back(X.cells[d][c]);
        }
    }
    Q.boundary[0] = ZGMatrix(0, static_cast<int>(Q.cells[0].size()));
    for (int d = 1; d <= D; ++d) {
        ZGMatrix B(static_cast<int>(Q.cells[d - 1].size()),
                   static_cast<int>(Q.cells[d].size()));
        for (int c = 0; c < X.orbit_count(d); ++c) {
            if (dropped[d][c]) continue;
            for (int r = 0; r < X.orbit_count(d - 1); ++r) {
                if (dropped[d - 1][r]) continue;
                const ZGElem& e = X.boundary[d].entry(r, c);
                if (!e.is_zero()) B.set(newidx[d - 1][r], newidx[d][c], e);
            }
        }
        Q.boundary[d] = std::move(B);
    }
    return Q;
}

AbelianPresentation relative_borel_cohomology(
    const GCWComplex& X, const std::vector<std::vector<int>>& drop,
    const GModule& M, int n) {
    BorelCohomology B(quotient_complex(X, drop), M, n);
    return B.at(n);
}

SplitReport fixed_point_split_check(const GCWComplex& X, const GModule& M,
                                    int n) {
    const FinGroup& G = *X.G;
    int fixed_orbit = -1;
    for (int c = 0; c < X.orbit_count(0); ++c) {
        std::set<int> stab(X.cells[0][c].stab.begin(),
                           X.cells[0][c].stab.end());
        if (static_cast<int>(stab.size()) == G.order()) {
            fixed_orbit = c;
            break;
        }
    }
    if (fixed_orbit < 0)
        throw std::invalid_argument(
            "fixed_point_split_check: no fully fixed 0-cell");

    BorelCohomology B(X, M, n);
    const AbelianPresentation& T = B.at(n);
    GroupCohomology Hpt(M, n + 1);
    const AbelianPresentation& P = Hpt.at(n);

    // Restricting to the fixed cell projects the total complex onto the
    // coordinates pairing resolution generators with that single cell;
    // those are exactly the group-cochain coordinates.
    int x0 = B.expansion().cell_index(0, fixed_orbit, G.id);
    int mr = M.rank;
    AbelianMap f;
    f.dom = &T;
    f.cod = &P;
    f.mat = IntMatrix(P.ngens(), T.ngens());
    int rn = Hpt.cochain_dim(n) / std::max(mr, 1);
    for (int k = 0; k < T.ngens(); ++k) {
        std::vector<Int> rep =
            to_dense(B.solver().representative(n, k), B.dim_total(n));
        std::vector<Int> w(Hpt.cochain_dim(n));
        for (int c = 0; c < rn; ++c)
            for (int i = 0; i < mr; ++i)
                w[c * mr + i] = rep[B.total_index(n, n, c, x0, i)];
        std::vector<Int> cls = Hpt.class_of(n, w);
        for (int i = 0; i < P.ngens(); ++i)
            if (!is_zero(cls[i])) f.mat.set(i, k, cls[i]);
    }

    SplitReport rep;
    rep.total = T.iso();
    rep.point = P.iso();
    rep.reduced = subgroup_iso_type(T, kernel_gens(f));
    bool onto = cokernel_iso_type(f).is_zero();

    IsoType sum;
    sum.free_rank = rep.point.free_rank + rep.reduced.free_rank;
    std::vector<Int> pt = rep.point.primary_torsion();
    std::vector<Int> rt = rep.reduced.primary_torsion();
    sum.torsion.reserve(pt.size() + rt.size());
    std::merge(pt.begin(), pt.end(), rt.begin(), rt.end(),
               std::back_inserter(sum.torsion));
    rep.ok = f.well_defined() && onto && rep.total.same_as(sum);
    return rep;
}

// ---- JSON ---------------------------------------------------------------

namespace {

nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p())
        return static_cast<long>(v.get_si());
    return to_string(v);
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

std::vector<int> close_under_multiplication(const FinGroup& G,
                                            std::vector<int> gens) {
    std::vector<bool> in(G.order(), false);
    in[G.id] = true;
    std::vector<int> elems = {G.id};
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (int g : gens) {
            int h = G.mult(elems[head], g);
            if (!in[h]) {
                in[h] = true;
                elems.push_back(h);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace

std::string gcw_to_json(const GCWComplex& X) {
    X.validate();
    const FinGroup& G = *X.G;
    nlohmann::json j;
    j["group"]["elements"] = G.labels;
    j["group"]["table"] = G.table;
    nlohmann::json cells = nlohmann::json::array();
    for (int d = 0; d <= X.dim(); ++d) {
        nlohmann::json layer = nlohmann::json::array();
        for (const GCWCell& c : X.cells[d])
            layer.push_back({{"label", c.label}, {"stabilizer", c.stab}});
        cells.push_back(std::move(layer));
    }
    j["cells"] = std::move(cells);
    nlohmann::json bnd = nlohmann::json::array();
    bnd.push_back(nlohmann::json::array());
    for (int d = 1; d <= X.dim(); ++d) {
        nlohmann::json layer = nlohmann::json::array();
        for (int c = 0; c < X.orbit_count(d); ++c) {
            nlohmann::json entries = nlohmann::json::array();
            for (int r = 0; r < X.orbit_count(d - 1); ++r)
                for (const auto& [g, coeff] : X.boundary[d].entry(r, c).terms())
                    entries.push_back(
                        nlohmann::json::array({r, g, int_to_json(coeff)}));
            layer.push_back(std::move(entries));
        }
        bnd.push_back(std::move(layer));
    }
    j["boundary"] = std::move(bnd);
    return j.dump(2);
}

namespace {

GCWComplex gcw_from_parsed(const nlohmann::json& j, const FinGroup& G) {
    if (!j.is_object() || !j.contains("group") || !j.contains("cells") ||
        !j.contains("boundary"))
        throw std::invalid_argument(
            "gcw_from_json: need group, cells and boundary");
    const nlohmann::json& jg = j["group"];
    if (!jg.contains("table") ||
        jg["table"].get<std::vector<std::vector<int>>>() != G.table)
        throw std::invalid_argument(
            "gcw_from_json: embedded group does not match the given group");

    GCWComplex X;
    X.G = &G;
    const nlohmann::json& jc = j["cells"];
    const nlohmann::json& jb = j["boundary"];
    if (!jc.is_array() || jc.empty() || !jb.is_array() ||
        jb.size() != jc.size())
        throw std::invalid_argument(
            "gcw_from_json: cells/boundary must be equal-length arrays");
    int D = static_cast<int>(jc.size()) - 1;
    X.cells.resize(D + 1);
    X.boundary.resize(D + 1);
    for (int d = 0; d <= D; ++d) {
        if (!jc[d].is_array())
            throw std::invalid_argument(
                "gcw_from_json: each degree is an array of cells");
        for (const nlohmann::json& cell : jc[d]) {
            GCWCell c;
            c.label = cell.value("label", std::string());
            if (!cell.contains("stabilizer"))
                throw std::invalid_argument(
                    "gcw_from_json: cell without stabilizer");
            auto gens = cell["stabilizer"].get<std::vector<int>>();
            for (int g : gens)
                if (g < 0 || g >= G.order())
                    throw std::invalid_argument(
                        "gcw_from_json: stabilizer element out of range");
            c.stab = close_under_multiplication(G, std::move(gens));
            X.cells[d].push_back(std::move(c));
        }
    }
    X.boundary[0] = ZGMatrix(0, X.orbit_count(0));
    for (int d = 1; d <= D; ++d) {
        if (!jb[d].is_array() ||
            static_cast<int>(jb[d].size()) != X.orbit_count(d))
            throw std::invalid_argument(
                "gcw_from_json: one boundary list per cell required");
        ZGMatrix B(X.orbit_count(d - 1), X.orbit_count(d));
        for (int c = 0; c < X.orbit_count(d); ++c)
            for (const nlohmann::json& t : jb[d][c]) {
                if (!t.is_array() || t.size() != 3)
                    throw std::invalid_argument(
                        "gcw_from_json: boundary entries are "
                        "[cell, element, coefficient] triples");
                int r = t[0].get<int>();
                int g = t[1].get<int>();
                if (r < 0 || r >= X.orbit_count(d - 1))
                    throw std::invalid_argument(
                        "gcw_from_json: boundary target out of range");
                if (g < 0 || g >= G.order())
                    throw std::invalid_argument(
                        "gcw_from_json: boundary element out of range");
                B.add_term(r, c, g, int_from_json(t[2]));
            }
        X.boundary[d] = std::move(B);
    }
    // Full homological validation; loaded complexes are ready to use.
    expand_to_cw(X);
    return X;
}

}  // namespace

GCWComplex gcw_from_json(const std::string& json_text, const FinGroup& G) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("gcw_from_json: ") + e.what());
    }
    try {
        return gcw_from_parsed(j, G);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("gcw_from_json: ") + e.what());
    }
}

GCWComplex gcw_from_json_file(const std::string& path, const FinGroup& G) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("gcw_from_json_file: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return gcw_from_json(ss.str(), G);
}

}  // namespace eqc
