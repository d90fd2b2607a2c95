#include "eqcoh/modp.hpp"

#include <stdexcept>

namespace eqc {

namespace {

unsigned long modp_inv(unsigned long a, unsigned long p) {
    // extended Euclid; p prime and a != 0 mod p
    long long t = 0, nt = 1, r = static_cast<long long>(p),
              nr = static_cast<long long>(a % p);
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("modp_inv: not invertible");
    return static_cast<unsigned long>((t % static_cast<long long>(p) + p) % p);
}

// In-place row echelon using only the first `width` coordinates as pivot
// columns.  Returns the rank; rows are permuted so the first `rank` rows are
// the pivot rows.
long echelon(std::vector<ModPVec>& rows, unsigned long p, size_t width) {
    long rank = 0;
    for (size_t col = 0; col < width; ++col) {
        size_t piv = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] % p != 0) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        unsigned long inv = modp_inv(rows[rank][col], p);
        for (auto& v : rows[rank]) v = v % p * inv % p;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<long>(i) == rank) continue;
            unsigned long c = rows[i][col] % p;
            if (c == 0) continue;
            for (size_t j = 0; j < rows[i].size(); ++j)
                rows[i][j] = (rows[i][j] + (p - c) * rows[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<ModPVec> matrix_rows_modp(const IntMatrix& A, unsigned long p) {
    std::vector<ModPVec> rows(A.rows(), ModPVec(A.cols(), 0));
    for (int i = 0; i < A.rows(); ++i)
        for (const auto& [j, v] : A.row(i))
            rows[i][j] = mpz_fdiv_ui(v.get_mpz_t(), p);
    return rows;
}

}  // namespace

ModPVec modp_reduce_vector(const std::vector<Int>& v, unsigned long p) {
    ModPVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), p);
    return out;
}

long modp_span_rank(std::vector<ModPVec> rows, unsigned long p) {
    if (rows.empty()) return 0;
    return echelon(rows, p, rows[0].size());
}

long modp_rank(const IntMatrix& A, unsigned long p) {
    auto rows = matrix_rows_modp(A, p);
    return echelon(rows, p, A.cols());
}

std::vector<ModPVec> modp_kernel(const IntMatrix& A, unsigned long p) {
    // Eliminate columns of A (rows of the transpose) augmented with an
    // identity block; rows whose A-part vanishes record kernel combinations.
    const int m = A.rows(), n = A.cols();
    std::vector<ModPVec> rows(n, ModPVec(m + n, 0));
    for (int i = 0; i < m; ++i)
        for (const auto& [j, v] : A.row(i))
            rows[j][i] = mpz_fdiv_ui(v.get_mpz_t(), p);
    for (int j = 0; j < n; ++j) rows[j][m + j] = 1;
    long rank = echelon(rows, p, m);
    std::vector<ModPVec> out;
    for (size_t i = rank; i < rows.size(); ++i)
        out.emplace_back(rows[i].begin() + m, rows[i].end());
    return out;
}

long modp_cohomology_dim(const IntMatrix& d_in, const IntMatrix& d_out,
                         unsigned long p) {
    long rin = d_in.cols() == 0 ? 0 : modp_rank(d_in, p);
    return d_out.cols() - modp_rank(d_out, p) - rin;
}

long modp_intersection_dim(const std::vector<ModPVec>& u,
                           const std::vector<ModPVec>& w, unsigned long p) {
    long du = modp_span_rank(u, p);
    long dw = modp_span_rank(w, p);
    std::vector<ModPVec> both = u;
    both.insert(both.end(), w.begin(), w.end());
    return du + dw - modp_span_rank(std::move(both), p);
}

}  // namespace eqc
