#pragma once

#include <string>
#include <vector>

#include "specmate/bigint.hpp"
#include "specmate/factor.hpp"
#include "specmate/graph.hpp"
#include "specmate/walk.hpp"

namespace specmate {

struct PotentialPrime {
    Int p;
    unsigned long t;  // multiplicity of p in L
    Int dn_deflated;  // last invariant factor of the deflated walk matrix
};

struct EliminatedPrime {
    Int p;
    std::string rule;
};

// Everything the solver needs to know about which levels are possible.
// L = prod p^t over potential primes; any orthogonal similarity between the
// input and a generalized-cospectral mate has level dividing L.
struct LevelBound {
    Int d = 0;                     // |last invariant factor| of the base walk matrix
    std::vector<Int> base_snf;     // full invariant-factor list of that matrix
    Int disc = 0;                  // discriminant of the characteristic polynomial
    Int candidate_gcd = 0;         // gcd(disc, d): its odd prime divisors are screened
    std::vector<PotentialPrime> primes;
    std::vector<EliminatedPrime> eliminated;
    Int L = 1;
    bool factorization_incomplete = false;
    Int unfactored = 1;            // composite remainder when incomplete
};

LevelBound compute_level_bound(const Graph& g, const WalkData& wd,
                               uint64_t factor_budget = uint64_t{1} << 22);

}  // namespace specmate
