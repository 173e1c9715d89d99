#include "specmate/level.hpp"

#include <algorithm>

#include "specmate/matrix.hpp"
#include "specmate/poly.hpp"

namespace specmate {

LevelBound compute_level_bound(const Graph& g, const WalkData& wd, uint64_t factor_budget) {
    if (wd.klass == Controllability::unsupported)
        throw internal_error("compute_level_bound: unsupported walk class");

    LevelBound lb;
    IntMat base = base_walk_matrix(wd, 0);
    lb.base_snf = smith_normal_form(base).d;
    Int dn = lb.base_snf.back();
    if (dn == 0) throw internal_error("compute_level_bound: base walk matrix is singular");
    lb.d = int_abs(dn);

    lb.disc = discriminant(char_poly(adjacency_matrix(g)));
    lb.candidate_gcd = int_gcd(lb.disc, lb.d);

    // candidate primes: 2 unconditionally, plus odd divisors p of
    // gcd(disc, d) whose square still divides the discriminant
    std::vector<Int> candidates{Int(2)};
    Int odd_part = lb.candidate_gcd;
    while (odd_part % 2 == 0) odd_part /= 2;
    Factorization fac = factorize(odd_part, factor_budget);
    if (!fac.complete()) {
        lb.factorization_incomplete = true;
        lb.unfactored = fac.cofactor;
    }
    for (const auto& [p, mult] : fac.factors) {
        (void)mult;
        if (divides(p * p, lb.disc))
            candidates.push_back(p);
        else
            lb.eliminated.push_back({p, "squarefree-discriminant"});
    }
    std::sort(candidates.begin(), candidates.end());

    for (const Int& p : candidates) {
        IntMat wp = modified_walk_matrix(wd, g, p, 0);
        std::vector<Int> diag = smith_normal_form(wp).d;
        Int dn_p = diag.back();
        if (dn_p == 0) throw internal_error("compute_level_bound: deflated walk matrix is singular");
        dn_p = int_abs(dn_p);
        unsigned long t = ord_p(dn_p, p);
        // deflation can only reduce the p-part of the last invariant factor
        if (t > ord_p(lb.d, p))
            throw internal_error("compute_level_bound: deflation increased the p-multiplicity");
        if (t == 0) {
            lb.eliminated.push_back({p, "unit-p-part"});
            continue;
        }
        lb.primes.push_back({p, t, dn_p});
        lb.L *= int_pow(p, t);
    }
    return lb;
}

}  // namespace specmate
