#include "specmate/factor.hpp"

#include <algorithm>

namespace specmate {

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    // 40 rounds on top of the builtin BPSW stage
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

constexpr unsigned long trial_limit = 1000000;

// one squaring step of Brent's iteration
inline void advance(Int& y, const Int& c, const Int& n) {
    y = (y * y + c) % n;
}

// nontrivial divisor of composite n, or 0 when the budget runs out
Int pollard_brent(const Int& n, uint64_t& budget) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1; budget > 0; ++c) {
        Int y = 2, q = 1, g = 1, x, ys;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                advance(y, c, n);
                --budget;
            }
            unsigned long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                unsigned long steps = std::min(batch, r - k);
                for (unsigned long i = 0; i < steps && budget > 0; ++i) {
                    advance(y, c, n);
                    --budget;
                    q = q * int_abs(x - y) % n;
                }
                g = int_gcd(q, n);
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // the whole batch collapsed; replay one step at a time
            g = 1;
            while (g == 1) {
                advance(ys, c, n);
                g = int_gcd(int_abs(x - ys), n);
            }
        }
        if (g > 1 && g < n) return g;
        // g == n even after replay: retry with the next polynomial offset
    }
    return 0;
}

void note_prime(std::vector<std::pair<Int, unsigned>>& out, const Int& p, unsigned mult) {
    for (auto& [q, m] : out)
        if (q == p) {
            m += mult;
            return;
        }
    out.emplace_back(p, mult);
}

// splits m (no factors below the trial limit) into primes, or gives up
void crack(const Int& m, unsigned mult, std::vector<std::pair<Int, unsigned>>& out, Int& cofactor,
           uint64_t& budget) {
    if (m == 1) return;
    if (is_probable_prime(m)) {
        note_prime(out, m, mult);
        return;
    }
    // peel perfect powers first: rho behaves poorly on p^k
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(m.get_mpz_t(), 2); ++e) {
            Int root;
            if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), e) != 0) {
                crack(root, mult * static_cast<unsigned>(e), out, cofactor, budget);
                return;
            }
        }
    }
    Int d = pollard_brent(m, budget);
    if (d == 0) {
        Int piece = m;
        for (unsigned i = 0; i < mult; ++i) cofactor *= piece;
        return;
    }
    crack(d, mult, out, cofactor, budget);
    crack(exact_div(m, d), mult, out, cofactor, budget);
}

}  // namespace

Factorization factorize(const Int& n, uint64_t rho_budget) {
    if (n < 1) throw internal_error("factorize: argument must be positive");
    Factorization f;
    Int m = n;

    for (unsigned long p = 2; p <= trial_limit && m > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > m) break;
        if (m % p == 0) {
            Int rest;
            unsigned long mult = mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t());
            note_prime(f.factors, Int(p), static_cast<unsigned>(mult));
            m = rest;
        }
    }
    if (m > 1) {
        if (m <= Int(trial_limit) * trial_limit) {
            // below the square of the trial bound the remainder must be prime
            note_prime(f.factors, m, 1);
        } else {
            crack(m, 1, f.factors, f.cofactor, rho_budget);
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Int check = f.cofactor;
    for (const auto& [p, mult] : f.factors) check *= int_pow(p, mult);
    if (check != n) throw internal_error("factorize: product mismatch");
    return f;
}

}  // namespace specmate
