#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "fourfold/error.hpp"

namespace fourfold {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Largest integer n with n <= c + sqrt(r), decided by exact rational
// predicates; the floating start value is only a hint.
inline Int floor_plus_sqrt(const Rat& c, const Rat& r) {
    if (r < 0) raise("NegativeRadicand", "floor_plus_sqrt: negative radicand");
    double guess = c.get_d() + std::sqrt(r.get_d());
    Int n(std::floor(guess));
    auto ok = [&](const Int& m) {
        Rat d = Rat(m) - c;
        return d <= 0 || d * d <= r;
    };
    while (ok(n + 1)) n += 1;
    while (!ok(n)) n -= 1;
    return n;
}

// Smallest integer n with n >= c - sqrt(r).
inline Int ceil_minus_sqrt(const Rat& c, const Rat& r) {
    return -floor_plus_sqrt(-c, r);
}

inline bool fits_int64(const Int& n) {
    static const Int lo = Int("-9223372036854775808");
    static const Int hi = Int("9223372036854775807");
    return n >= lo && n <= hi;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace fourfold
