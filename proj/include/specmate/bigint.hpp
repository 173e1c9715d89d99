#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "specmate/errors.hpp"

namespace specmate {

using Int = mpz_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Quotient a/d when the division is known to be exact; anything else is a bug.
inline Int exact_div(const Int& a, const Int& d) {
    if (d == 0 || !divides(d, a)) throw internal_error("exact_div: inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

// a mod m normalized into [0, m).  Requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw internal_error("mod_floor: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Multiplicity of p in m (m != 0, p >= 2).
inline unsigned long ord_p(const Int& m, const Int& p) {
    if (m == 0) throw internal_error("ord_p: zero argument");
    if (p < 2) throw internal_error("ord_p: bad prime");
    Int rest;
    return mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw internal_error("mod_inverse: element not invertible");
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace specmate
