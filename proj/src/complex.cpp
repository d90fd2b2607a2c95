#include "eqcoh/complex.hpp"

#include "eqcoh/snf.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace eqc {

SparseVec to_sparse(const std::vector<Int>& v) {
    SparseVec out;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.emplace_back(static_cast<int>(i), v[i]);
    return out;
}

std::vector<Int> to_dense(const SparseVec& v, int n) {
    std::vector<Int> out(n);
    for (const auto& [i, val] : v) {
        if (i < 0 || i >= n) throw std::out_of_range("to_dense: bad index");
        out[i] = val;
    }
    return out;
}

void Complex::validate() const {
    if (mats.size() + 1 != dims.size())
        throw std::invalid_argument("Complex: need one matrix per gap");
    for (size_t m = 0; m < mats.size(); ++m)
        if (mats[m].rows() != dims[m + 1] || mats[m].cols() != dims[m])
            throw std::invalid_argument("Complex: matrix shape mismatch");
    for (size_t m = 0; m + 1 < mats.size(); ++m)
        if (!mats[m + 1].mul(mats[m]).is_zero())
            throw std::invalid_argument("Complex: d o d != 0");
}

namespace {

struct TraceOp {
    int m, k, i;   // pivot at (row k, col i) of matrix m
    int u;         // pivot value, +-1
    SparseVec row;  // row k of matrix m at elimination time
    SparseVec col;  // column i of matrix m at elimination time
};

const Int* find_in_row(const SparseVec& row, int col) {
    auto it = std::lower_bound(
        row.begin(), row.end(), col,
        [](const std::pair<int, Int>& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

}  // namespace

struct ComplexSolver::Impl {
    Complex orig;
    ReduceOptions opt;
    int D;

    // Working state, one slot per matrix m = 0..D-1.
    std::vector<std::vector<SparseVec>> rows;
    std::vector<std::vector<std::vector<int>>> colrows;  // may hold stale ids
    std::vector<std::vector<int>> rnnz, cnnz;
    std::vector<std::vector<char>> alive;  // per degree
    std::vector<TraceOp> trace;
    ReduceStats st;

    std::vector<std::vector<int>> red2or, or2red;
    std::vector<IntMatrix> red_mats;

    std::vector<std::unique_ptr<AbelianPresentation>> pres;
    std::vector<std::vector<const TraceOp*>> degree_ops;
    std::vector<char> degree_ops_built;

    struct HeapEntry {
        long score;
        int m, k, i;
        bool operator>(const HeapEntry& o) const { return score > o.score; }
    };
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>
        heap;
    std::vector<HeapEntry> deferred;

    Impl(Complex c, ReduceOptions o) : orig(std::move(c)), opt(o) {
        D = orig.top_degree();
        if (D < 0) throw std::invalid_argument("ComplexSolver: empty complex");
        rows.resize(D);
        colrows.resize(D);
        rnnz.resize(D);
        cnnz.resize(D);
        alive.resize(D + 1);
        for (int d = 0; d <= D; ++d)
            alive[d].assign(orig.dims[d], 1);
        for (int m = 0; m < D; ++m) {
            const IntMatrix& A = orig.mats[m];
            rows[m].resize(A.rows());
            rnnz[m].assign(A.rows(), 0);
            cnnz[m].assign(A.cols(), 0);
            colrows[m].resize(A.cols());
            for (int k = 0; k < A.rows(); ++k) {
                rows[m][k] = A.row(k);
                rnnz[m][k] = static_cast<int>(rows[m][k].size());
                for (const auto& [c, v] : rows[m][k]) {
                    ++cnnz[m][c];
                    colrows[m][c].push_back(k);
                }
            }
        }
        reduce();
        extract();
        pres.resize(D + 1);
        degree_ops.resize(D + 1);
        degree_ops_built.assign(D + 1, 0);
    }

    long score_of(int m, int k, int i) const {
        return static_cast<long>(rnnz[m][k] - 1) *
               static_cast<long>(cnnz[m][i] - 1);
    }

    void seed_heap() {
        for (int m = 0; m < D; ++m)
            for (size_t k = 0; k < rows[m].size(); ++k)
                for (const auto& [c, v] : rows[m][k])
                    if (is_unit(v))
                        heap.push({score_of(m, static_cast<int>(k), c), m,
                                   static_cast<int>(k), c});
    }

    void reduce() {
        seed_heap();
        bool progress_since_refill = true;
        for (;;) {
            if (heap.empty()) {
                if (deferred.empty() || !progress_since_refill) break;
                for (auto& e : deferred) heap.push(e);
                deferred.clear();
                progress_since_refill = false;
                continue;
            }
            HeapEntry e = heap.top();
            heap.pop();
            if (!alive[e.m + 1][e.k] || !alive[e.m][e.i]) continue;
            const Int* pv = find_in_row(rows[e.m][e.k], e.i);
            if (!pv || !is_unit(*pv)) continue;
            long sc = score_of(e.m, e.k, e.i);
            if (sc > e.score) {
                heap.push({sc, e.m, e.k, e.i});
                continue;
            }
            if (sc > opt.fill_cap) {
                deferred.push_back({sc, e.m, e.k, e.i});
                continue;
            }
            eliminate(e.m, e.k, e.i, *pv < 0 ? -1 : 1);
            progress_since_refill = true;
        }
    }

    // row l of matrix m += coef * src; maintains counts, column index, and
    // pushes newly created unit entries onto the heap.
    void row_update(int m, int l, const Int& coef, const SparseVec& src) {
        SparseVec& dst = rows[m][l];
        SparseVec out;
        out.reserve(dst.size() + src.size());
        std::vector<int> unit_cols;
        std::vector<int> overfull_cols;
        size_t a = 0, b = 0;
        while (a < dst.size() || b < src.size()) {
            int ca = a < dst.size() ? dst[a].first
                                    : std::numeric_limits<int>::max();
            int cb = b < src.size() ? src[b].first
                                    : std::numeric_limits<int>::max();
            if (ca < cb) {
                out.push_back(std::move(dst[a]));
                ++a;
            } else if (cb < ca) {
                Int v = coef * src[b].second;
                if (v != 0) {
                    ++cnnz[m][cb];
                    auto& lst = colrows[m][cb];
                    lst.push_back(l);
                    // Compaction must wait: it tests membership via the row
                    // itself, and this row is mid-rebuild (the new entry is
                    // only in `out`), so compacting now would drop l from
                    // the column index and later eliminations in cb would
                    // miss this entry.
                    if (lst.size() > 64 &&
                        lst.size() > 4 * static_cast<size_t>(cnnz[m][cb]))
                        overfull_cols.push_back(cb);
                    if (is_unit(v)) unit_cols.push_back(cb);
                    out.emplace_back(cb, std::move(v));
                }
                ++b;
            } else {
                Int v = dst[a].second + coef * src[b].second;
                if (v == 0) {
                    --cnnz[m][ca];
                } else {
                    if (is_unit(v)) unit_cols.push_back(ca);
                    out.emplace_back(ca, std::move(v));
                }
                ++a;
                ++b;
            }
        }
        rnnz[m][l] = static_cast<int>(out.size());
        dst = std::move(out);
        for (int c : overfull_cols)
            if (colrows[m][c].size() > 64 &&
                colrows[m][c].size() > 4 * static_cast<size_t>(cnnz[m][c]))
                compact_column(m, c);
        for (int c : unit_cols) heap.push({score_of(m, l, c), m, l, c});
    }

    void compact_column(int m, int c) {
        auto& lst = colrows[m][c];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        std::vector<int> keep;
        keep.reserve(lst.size());
        for (int l : lst)
            if (alive[m + 1][l] && find_in_row(rows[m][l], c))
                keep.push_back(l);
        lst = std::move(keep);
        ++st.compactions;
    }

    void eliminate(int m, int k, int i, int u) {
        // Exact column support (the index may hold stale candidates).
        auto& cand = colrows[m][i];
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        SparseVec colsup;
        for (int l : cand)
            if (alive[m + 1][l])
                if (const Int* p = find_in_row(rows[m][l], i))
                    colsup.emplace_back(l, *p);

        trace.push_back({m, k, i, u, rows[m][k], colsup});
        SparseVec srcrow = rows[m][k];

        for (const auto& [l, c] : colsup)
            if (l != k) row_update(m, l, -(c * u), srcrow);

        // Row k disappears with coordinate k; column i with coordinate i.
        for (const auto& [c, v] : rows[m][k]) --cnnz[m][c];
        rows[m][k].clear();
        rnnz[m][k] = 0;
        cnnz[m][i] = 0;
        colrows[m][i].clear();

        alive[m][i] = 0;
        if (m > 0) {
            for (const auto& [c, v] : rows[m - 1][i]) --cnnz[m - 1][c];
            rows[m - 1][i].clear();
            rnnz[m - 1][i] = 0;
        }

        alive[m + 1][k] = 0;
        if (m + 1 < D) {
            auto& kc = colrows[m + 1][k];
            std::sort(kc.begin(), kc.end());
            kc.erase(std::unique(kc.begin(), kc.end()), kc.end());
            for (int l : kc) {
                if (!alive[m + 2][l]) continue;
                SparseVec& r = rows[m + 1][l];
                auto it = std::lower_bound(
                    r.begin(), r.end(), k,
                    [](const std::pair<int, Int>& e, int c) {
                        return e.first < c;
                    });
                if (it != r.end() && it->first == k) {
                    r.erase(it);
                    --rnnz[m + 1][l];
                }
            }
            cnnz[m + 1][k] = 0;
            kc.clear();
        }
        ++st.eliminations;
    }

    void extract() {
        red2or.resize(D + 1);
        or2red.resize(D + 1);
        for (int d = 0; d <= D; ++d) {
            or2red[d].assign(orig.dims[d], -1);
            for (int i = 0; i < orig.dims[d]; ++i)
                if (alive[d][i]) {
                    or2red[d][i] = static_cast<int>(red2or[d].size());
                    red2or[d].push_back(i);
                }
            st.reduced_dims.push_back(static_cast<int>(red2or[d].size()));
        }
        red_mats.clear();
        for (int m = 0; m < D; ++m) {
            IntMatrix R(static_cast<int>(red2or[m + 1].size()),
                        static_cast<int>(red2or[m].size()));
            for (int k : red2or[m + 1])
                for (const auto& [c, v] : rows[m][k]) {
                    if (or2red[m][c] < 0)
                        throw std::logic_error(
                            "reduction left a surviving row referencing an "
                            "eliminated coordinate");
                    R.set(or2red[m + 1][k], or2red[m][c], v);
                }
            red_mats.push_back(std::move(R));
        }
        // Release working storage; the trace and reduced data remain.
        rows.clear();
        colrows.clear();
        rnnz.clear();
        cnnz.clear();
    }

    const AbelianPresentation& presentation(int n) {
        if (n < 0 || n > D) throw std::out_of_range("degree out of range");
        if (!pres[n]) {
            int rn = static_cast<int>(red2or[n].size());
            IntMatrix d_in =
                n > 0 ? red_mats[n - 1] : IntMatrix(rn, 0);
            IntMatrix d_out =
                n < D ? red_mats[n] : IntMatrix(0, rn);
            pres[n] = std::make_unique<AbelianPresentation>(
                cohomology_at(d_in, d_out));
        }
        return *pres[n];
    }

    const std::vector<const TraceOp*>& ops_for(int n) {
        if (!degree_ops_built[n]) {
            for (const TraceOp& op : trace)
                if (op.m == n || op.m == n - 1)
                    degree_ops[n].push_back(&op);
            degree_ops_built[n] = 1;
        }
        return degree_ops[n];
    }

    // Project an original degree-n vector to reduced coordinates.
    std::vector<Int> phi(int n, const SparseVec& z) {
        std::vector<Int> v = to_dense(z, orig.dims[n]);
        for (const TraceOp* op : ops_for(n)) {
            if (op->m == n) {
                v[op->i] = 0;
            } else {  // op->m == n - 1: pivot column correction, drop coord k
                Int& vk = v[op->k];
                if (vk != 0) {
                    for (const auto& [l, c] : op->col)
                        if (l != op->k) v[l] -= c * op->u * vk;
                    vk = 0;
                }
            }
        }
        std::vector<Int> out(red2or[n].size());
        for (size_t j = 0; j < red2or[n].size(); ++j)
            out[j] = std::move(v[red2or[n][j]]);
        return out;
    }

    // Lift reduced degree-n coordinates back to an original cocycle.
    SparseVec psi(int n, const std::vector<Int>& vred) {
        std::vector<Int> v(orig.dims[n]);
        for (size_t j = 0; j < red2or[n].size(); ++j) v[red2or[n][j]] = vred[j];
        const auto& ops = ops_for(n);
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            const TraceOp* op = *it;
            if (op->m != n) continue;  // m == n-1 lifts by plain inclusion
            Int s = 0;
            for (const auto& [c, b] : op->row)
                if (c != op->i) s += b * v[c];
            v[op->i] = -op->u * s;
        }
        return to_sparse(v);
    }
};

ComplexSolver::ComplexSolver(Complex c, ReduceOptions opt)
    : impl_(std::make_unique<Impl>(std::move(c), opt)) {}
ComplexSolver::~ComplexSolver() = default;
ComplexSolver::ComplexSolver(ComplexSolver&&) noexcept = default;
ComplexSolver& ComplexSolver::operator=(ComplexSolver&&) noexcept = default;

int ComplexSolver::top_degree() const { return impl_->D; }
int ComplexSolver::original_dim(int n) const { return impl_->orig.dims[n]; }
int ComplexSolver::reduced_dim(int n) const {
    return static_cast<int>(impl_->red2or[n].size());
}

const AbelianPresentation& ComplexSolver::cohomology(int n) {
    return impl_->presentation(n);
}

std::vector<Int> ComplexSolver::class_of(int n, const SparseVec& z) {
    const AbelianPresentation& H = impl_->presentation(n);
    if (n < impl_->D) {
        // Check the cocycle condition against the *original* differential:
        // the projection to the reduced complex can silently absorb a
        // non-cocycle whose boundary lives in eliminated coordinates.
        std::vector<Int> dz =
            impl_->orig.mats[n].apply(to_dense(z, impl_->orig.dims[n]));
        for (const Int& v : dz)
            if (v != 0)
                throw std::invalid_argument("class_of: not a cocycle");
    }
    std::vector<Int> zr = impl_->phi(n, z);
    return H.class_of(zr);
}

SparseVec ComplexSolver::representative(int n, int g) {
    const AbelianPresentation& H = impl_->presentation(n);
    std::vector<Int> rep(H.ambient_dim());
    for (int i = 0; i < H.representatives.rows(); ++i)
        rep[i] = H.representatives.at(i, g);
    return impl_->psi(n, rep);
}

std::vector<SparseVec> ComplexSolver::cocycle_basis(int n) {
    const int D = impl_->D;
    if (n < 0 || n > D) throw std::out_of_range("degree out of range");
    if (n == D) {
        // No outgoing differential: every vector is a cocycle.
        std::vector<SparseVec> out;
        for (int j = 0; j < impl_->orig.dims[n]; ++j)
            out.push_back({{j, Int(1)}});
        return out;
    }
    if (n == 0) {
        // No incoming differential: our own trace restricts to an
        // isomorphism of kernel lattices.
        IntMatrix kred = kernel_basis(impl_->red_mats[0]);
        std::vector<SparseVec> out;
        for (int j = 0; j < kred.cols(); ++j) {
            std::vector<Int> col(kred.rows());
            for (int i = 0; i < kred.rows(); ++i) col[i] = kred.at(i, j);
            out.push_back(impl_->psi(0, col));
        }
        return out;
    }
    // Interior degree: eliminations in the incoming matrix shear the kernel
    // lattice, so run a clean two-term reduction of the original
    // differential.
    Complex two;
    two.dims = {impl_->orig.dims[n], impl_->orig.dims[n + 1]};
    two.mats = {impl_->orig.mats[n]};
    ComplexSolver sub(std::move(two));
    return sub.cocycle_basis(0);
}

const IntMatrix& ComplexSolver::reduced_matrix(int m) const {
    if (m < 0 || m >= impl_->D)
        throw std::out_of_range("matrix index out of range");
    return impl_->red_mats[m];
}

const std::vector<int>& ComplexSolver::alive_indices(int n) const {
    return impl_->red2or.at(n);
}

const ReduceStats& ComplexSolver::stats() const { return impl_->st; }

std::vector<SparseVec> sparse_kernel_basis(const IntMatrix& A) {
    Complex two;
    two.dims = {A.cols(), A.rows()};
    two.mats = {A};
    ComplexSolver s(std::move(two));
    return s.cocycle_basis(0);
}

}  // namespace eqc
