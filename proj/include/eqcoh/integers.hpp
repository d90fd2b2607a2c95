// Arbitrary-precision integer/rational scalar types and small helpers
// shared across the exact linear algebra layer.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace eqc {

using Int = mpz_class;
using Rat = mpq_class;

// g = gcd(a,b) together with x,y such that a*x + b*y = g (g >= 0).
inline void gcdext(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Exact quotient; caller guarantees divisibility.
inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Representative of a mod m in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_zero(const Int& a) { return mpz_sgn(a.get_mpz_t()) == 0; }
inline bool is_unit(const Int& a) {
    return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace eqc
