#include "eqcoh/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace eqc {

namespace {

// Dense elimination state.  Row operations on the work matrix are mirrored on
// L (same op) and Linv (inverse op, acting on columns); column operations are
// mirrored on R and Rinv likewise.
struct Elim {
    int m, n;
    std::vector<std::vector<Int>> w;  // m x n working copy
    bool wl, wr, wli, wri;
    std::vector<std::vector<Int>> L, Li, R, Ri;

    Elim(const IntMatrix& A, unsigned flags)
        : m(A.rows()),
          n(A.cols()),
          w(m, std::vector<Int>(n)),
          wl(flags & SNF_L),
          wr(flags & SNF_R),
          wli(flags & SNF_LINV),
          wri(flags & SNF_RINV) {
        for (int i = 0; i < m; ++i)
            for (const auto& [j, v] : A.row(i)) w[i][j] = v;
        if (wl) L = dense_identity(m);
        if (wli) Li = dense_identity(m);
        if (wr) R = dense_identity(n);
        if (wri) Ri = dense_identity(n);
    }

    static std::vector<std::vector<Int>> dense_identity(int k) {
        std::vector<std::vector<Int>> e(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i) e[i][i] = 1;
        return e;
    }

    void row_swap(int a, int b) {
        if (a == b) return;
        w[a].swap(w[b]);
        if (wl) L[a].swap(L[b]);
        if (wli)  // inverse of a swap is the same swap, applied to columns
            for (int i = 0; i < m; ++i) std::swap(Li[i][a], Li[i][b]);
    }

    void col_swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m; ++i) std::swap(w[i][a], w[i][b]);
        if (wr)
            for (int i = 0; i < n; ++i) std::swap(R[i][a], R[i][b]);
        if (wri) Ri[a].swap(Ri[b]);
    }

    // row a += c * row b
    void row_axpy(int a, int b, const Int& c) {
        if (c == 0) return;
        for (int j = 0; j < n; ++j)
            if (w[b][j] != 0) w[a][j] += c * w[b][j];
        if (wl)
            for (int j = 0; j < m; ++j)
                if (L[b][j] != 0) L[a][j] += c * L[b][j];
        if (wli)  // Linv := Linv * (I - c E_ab): col b -= c * col a
            for (int i = 0; i < m; ++i)
                if (Li[i][a] != 0) Li[i][b] -= c * Li[i][a];
    }

    // col a += c * col b
    void col_axpy(int a, int b, const Int& c) {
        if (c == 0) return;
        for (int i = 0; i < m; ++i)
            if (w[i][b] != 0) w[i][a] += c * w[i][b];
        if (wr)
            for (int i = 0; i < n; ++i)
                if (R[i][b] != 0) R[i][a] += c * R[i][b];
        if (wri)  // Rinv := (I - c E_ba) * Rinv: row b -= c * row a
            for (int j = 0; j < n; ++j)
                if (Ri[a][j] != 0) Ri[b][j] -= c * Ri[a][j];
    }

    void row_negate(int a) {
        for (int j = 0; j < n; ++j)
            if (w[a][j] != 0) w[a][j] = -w[a][j];
        if (wl)
            for (int j = 0; j < m; ++j)
                if (L[a][j] != 0) L[a][j] = -L[a][j];
        if (wli)
            for (int i = 0; i < m; ++i)
                if (Li[i][a] != 0) Li[i][a] = -Li[i][a];
    }
};

// Quotient of a by positive p rounded to nearest (remainder in [-p/2, p/2]).
Int nearest_quotient(const Int& a, const Int& p) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (2 * r > p) q += 1;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A, unsigned flags) {
    Elim e(A, flags);
    const int m = e.m, n = e.n;
    const int steps = std::min(m, n);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing submatrix becomes the
            // pivot; elimination remainders only ever shrink it.
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (e.w[i][j] == 0) continue;
                    if (pi < 0 ||
                        mpz_cmpabs(e.w[i][j].get_mpz_t(),
                                   e.w[pi][pj].get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto diagonal_done;
            e.row_swap(t, pi);
            e.col_swap(t, pj);
            if (e.w[t][t] < 0) e.row_negate(t);

            bool leftover = false;
            for (int i = t + 1; i < m; ++i) {
                if (e.w[i][t] == 0) continue;
                e.row_axpy(i, t, -nearest_quotient(e.w[i][t], e.w[t][t]));
                if (e.w[i][t] != 0) leftover = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (e.w[t][j] == 0) continue;
                e.col_axpy(j, t, -nearest_quotient(e.w[t][j], e.w[t][t]));
                if (e.w[t][j] != 0) leftover = true;
            }
            if (leftover) continue;  // strictly smaller entries appeared

            // Pivot now alone in its row and column; force divisibility of
            // the rest of the submatrix before accepting it.
            int bi = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (e.w[i][j] % e.w[t][t] != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            e.row_axpy(t, bi, 1);
        }
    }
diagonal_done:

    SmithForm out;
    out.d.resize(steps);
    for (int t = 0; t < steps; ++t) {
        out.d[t] = e.w[t][t];
        if (out.d[t] != 0) out.rank = t + 1;
    }
    if (flags & SNF_L) out.L = IntMatrix::from_dense(e.L);
    if (flags & SNF_LINV) out.Linv = IntMatrix::from_dense(e.Li);
    if (flags & SNF_R) out.R = IntMatrix::from_dense(e.R);
    if (flags & SNF_RINV) out.Rinv = IntMatrix::from_dense(e.Ri);
    return out;
}

IntMatrix kernel_basis(const IntMatrix& A) {
    SmithForm s = smith_normal_form(A, SNF_R);
    std::vector<int> free_cols;
    for (int j = s.rank; j < A.cols(); ++j) free_cols.push_back(j);
    return s.R.cols_subset(free_cols);
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& A,
                                             const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != A.rows())
        throw std::invalid_argument("solve_linear: size mismatch");
    SmithForm s = smith_normal_form(A, SNF_L | SNF_R);
    std::vector<Int> lb = s.L.apply(b);
    std::vector<Int> y(A.cols());
    for (int j = 0; j < A.rows(); ++j) {
        if (j < s.rank) {
            if (lb[j] % s.d[j] != 0) return std::nullopt;
            y[j] = lb[j] / s.d[j];
        } else if (lb[j] != 0) {
            return std::nullopt;
        }
    }
    return s.R.apply(y);
}

}  // namespace eqc
