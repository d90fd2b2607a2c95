#include "eqcoh/resolution.hpp"

#include <stdexcept>

namespace eqc {

// ---------------------------------------------------------------------------
// ZGElem

void ZGElem::add(int g, const Int& coeff) {
    if (eqc::is_zero(coeff)) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, coeff);
    } else {
        it->second += coeff;
        if (eqc::is_zero(it->second)) terms_.erase(it);
    }
}

ZGElem& ZGElem::operator+=(const ZGElem& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

ZGElem ZGElem::operator-() const {
    ZGElem r;
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
    return r;
}

ZGElem ZGElem::mul(const ZGElem& o, const FinGroup& G) const {
    ZGElem r;
    for (const auto& [g, c] : terms_)
        for (const auto& [h, d] : o.terms_) r.add(G.mult(g, h), c * d);
    return r;
}

ZGElem norm_element(const FinGroup& G) {
    ZGElem r;
    for (int g = 0; g < G.order(); ++g) r.add(g, 1);
    return r;
}

// ---------------------------------------------------------------------------
// ZGMatrix

bool ZGMatrix::is_zero() const {
    for (const auto& row : a_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

ZGMatrix ZGMatrix::mul(const ZGMatrix& b, const FinGroup& G) const {
    if (cols_ != b.rows_) throw std::invalid_argument("ZGMatrix::mul shapes");
    ZGMatrix r(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int m = 0; m < cols_; ++m) {
            if (a_[i][m].is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.a_[m][j].is_zero()) continue;
                r.a_[i][j] += a_[i][m].mul(b.a_[m][j], G);
            }
        }
    return r;
}

IntMatrix ZGMatrix::flatten(const FinGroup& G) const {
    const int n = G.order();
    IntMatrix out(rows_ * n, cols_ * n);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            for (const auto& [g, coeff] : a_[r][c].terms())
                // e_c * h  ->  e_r * (g h): column c*n+h hits row r*n+idx(gh).
                for (int h = 0; h < n; ++h)
                    out.add(r * n + G.mult(g, h), c * n + h, coeff);
    return out;
}

// ---------------------------------------------------------------------------
// Resolution

void Resolution::validate() const {
    if (!G) throw std::invalid_argument("resolution: no group");
    const int top = max_degree();
    if (static_cast<int>(diff.size()) != top + 1)
        throw std::invalid_argument("resolution: diff size mismatch");
    for (int p = 1; p <= top; ++p) {
        if (diff[p].rows() != ranks[p - 1] || diff[p].cols() != ranks[p])
            throw std::invalid_argument("resolution: diff shape mismatch");
        if (p >= 2 && !diff[p - 1].mul(diff[p], *G).is_zero())
            throw std::invalid_argument("resolution: d o d != 0");
    }
}

IntMatrix Resolution::flattened_boundary(int p) const {
    if (p < 1 || p > max_degree())
        throw std::out_of_range("flattened_boundary degree");
    return diff[p].flatten(*G);
}

// ---------------------------------------------------------------------------
// BarIndexer

BarIndexer::BarIndexer(const FinGroup& G, int length)
    : G_(&G), length_(length) {
    pos_.assign(G.order(), -1);
    for (int g = 0; g < G.order(); ++g)
        if (g != G.id) {
            pos_[g] = static_cast<int>(nonid_.size());
            nonid_.push_back(g);
        }
    count_ = 1;
    for (int i = 0; i < length_; ++i)
        count_ *= static_cast<long>(nonid_.size());
}

long BarIndexer::index_of(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != length_)
        throw std::invalid_argument("BarIndexer: tuple length");
    long idx = 0;
    for (int g : tuple) {
        if (g == G_->id) throw std::invalid_argument("BarIndexer: identity");
        idx = idx * static_cast<long>(nonid_.size()) + pos_[g];
    }
    return idx;
}

std::vector<int> BarIndexer::tuple_at(long index) const {
    std::vector<int> t(length_);
    const long base = static_cast<long>(nonid_.size());
    for (int i = length_ - 1; i >= 0; --i) {
        t[i] = nonid_[index % base];
        index /= base;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Bar resolution

Resolution bar_resolution(const FinGroup& G, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("bar_resolution degree");
    Resolution R;
    R.G = &G;
    std::vector<BarIndexer> ix;
    for (int p = 0; p <= max_degree; ++p) ix.emplace_back(G, p);
    for (int p = 0; p <= max_degree; ++p)
        R.ranks.push_back(static_cast<int>(ix[p].tuple_count()));
    R.diff.resize(max_degree + 1);
    for (int p = 1; p <= max_degree; ++p) {
        ZGMatrix d(R.ranks[p - 1], R.ranks[p]);
        for (long c = 0; c < ix[p].tuple_count(); ++c) {
            const std::vector<int> t = ix[p].tuple_at(c);
            // Face 0: drop g_1, coefficient +1 (the group acts on the right,
            // so the left-most entry just falls away).
            {
                std::vector<int> f(t.begin() + 1, t.end());
                d.add_term(static_cast<int>(ix[p - 1].index_of(f)),
                           static_cast<int>(c), G.id, 1);
            }
            // Faces 1..p-1: merge g_i g_{i+1}; dropped if the product is
            // the identity (normalized resolution).
            for (int i = 1; i <= p - 1; ++i) {
                const int prod = G.mult(t[i - 1], t[i]);
                if (prod == G.id) continue;
                std::vector<int> f;
                f.reserve(p - 1);
                for (int j = 0; j < p; ++j) {
                    if (j == i - 1) {
                        f.push_back(prod);
                    } else if (j != i) {
                        f.push_back(t[j]);
                    }
                }
                d.add_term(static_cast<int>(ix[p - 1].index_of(f)),
                           static_cast<int>(c), G.id, (i % 2 == 0) ? 1 : -1);
            }
            // Face p: drop g_p, which becomes a module coefficient.
            {
                std::vector<int> f(t.begin(), t.end() - 1);
                d.add_term(static_cast<int>(ix[p - 1].index_of(f)),
                           static_cast<int>(c), t[p - 1],
                           (p % 2 == 0) ? 1 : -1);
            }
        }
        R.diff[p] = std::move(d);
    }
    return R;
}

// ---------------------------------------------------------------------------
// Periodic resolution for cyclic groups

Resolution periodic_cyclic_resolution(const FinGroup& G, int gen,
                                      int max_degree) {
    // Check gen really generates the whole group.
    {
        std::vector<char> seen(G.order(), 0);
        int g = G.id;
        for (int i = 0; i < G.order(); ++i) {
            seen[g] = 1;
            g = G.mult(g, gen);
        }
        for (char s : seen)
            if (!s)
                throw std::invalid_argument(
                    "periodic_cyclic_resolution: element does not generate");
    }
    Resolution R;
    R.G = &G;
    R.ranks.assign(max_degree + 1, 1);
    R.diff.resize(max_degree + 1);
    for (int p = 1; p <= max_degree; ++p) {
        ZGMatrix d(1, 1);
        if (p % 2 == 1) {
            d.add_term(0, 0, gen, 1);
            d.add_term(0, 0, G.id, -1);
        } else {
            d.set(0, 0, norm_element(G));
        }
        R.diff[p] = std::move(d);
    }
    return R;
}

// ---------------------------------------------------------------------------
// Hom complex

Complex hom_complex(const Resolution& R, const GModule& M) {
    if (R.G != M.G)
        throw std::invalid_argument("hom_complex: group mismatch");
    const int top = R.max_degree();
    const int mr = M.rank;
    Complex C;
    for (int p = 0; p <= top; ++p) C.dims.push_back(R.ranks[p] * mr);
    C.mats.resize(top);
    // The cochain differential at degree p-1 is precomposition with diff[p].
    // For f in Hom_G(F_{p-1}, M): (df)(e_c) = sum_r f(e_r * a_{rc})
    //                                       = sum_r f(e_r) . a_{rc},
    // and the right action of a group element g on M is action(g^{-1}).
    for (int p = 1; p <= top; ++p) {
        const ZGMatrix& d = R.diff[p];
        IntMatrix D(R.ranks[p] * mr, R.ranks[p - 1] * mr);
        for (int r = 0; r < d.rows(); ++r)
            for (int c = 0; c < d.cols(); ++c)
                for (const auto& [g, coeff] : d.entry(r, c).terms()) {
                    const IntMatrix& A = M.action(M.G->inverse(g));
                    for (int i = 0; i < mr; ++i)
                        for (const auto& [j, v] : A.row(i))
                            D.add(c * mr + i, r * mr + j, coeff * v);
                }
        C.mats[p - 1] = std::move(D);
    }
    return C;
}

}  // namespace eqc
