#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specmate/bigint.hpp"

namespace specmate {

// Miller-Rabin / BPSW with a fixed round count; no certified primality.
bool is_probable_prime(const Int& n);

struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, multiplicity), primes ascending
    Int cofactor = 1;                               // unfactored composite remainder, 1 if none

    bool complete() const { return cofactor == 1; }
};

// Trial division up to 10^6, perfect-power peeling, then Brent's cycle
// variant of Pollard rho limited by an iteration budget.  On budget
// exhaustion the remaining composite lands in cofactor instead of looping
// forever.
Factorization factorize(const Int& n, uint64_t rho_budget = uint64_t{1} << 22);

}  // namespace specmate
