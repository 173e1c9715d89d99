#pragma once

#include <cstdint>
#include <vector>

#include "specmate/bigint.hpp"
#include "specmate/graph.hpp"
#include "specmate/level.hpp"
#include "specmate/matrix.hpp"
#include "specmate/walk.hpp"

namespace specmate {

// Integer vector of length n; lexicographic ordering comes from std::vector.
using SolutionVector = std::vector<Int>;

// A solution class modulo a fixed prime power (or modulo L after combining).
struct ResidueVector {
    Int modulus;
    std::vector<Int> entries;  // reduced into [0, modulus)

    bool operator==(const ResidueVector& o) const = default;
    bool operator<(const ResidueVector& o) const {
        return entries < o.entries;  // moduli agree wherever we sort these
    }
};

// Step 1: all x mod p^t with Wp^T x = 0 (mod p^t), x^T x = 0 (mod p^t) and
// x^T A x = 0 (mod p^t).  The linear lattice is read off the Smith
// decomposition of Wp^T; quadratic conditions filter the enumeration.
// Throws cap_exceeded when the linear solution count would pass the cap.
std::vector<ResidueVector> solve_prime_system(const IntMat& wp, const Graph& g, const Int& p,
                                              unsigned long t, uint64_t cap);

// Step 2: one congruence class mod prod(moduli) from classes mod coprime moduli.
ResidueVector crt_combine(const std::vector<ResidueVector>& parts);

// Step 3: integer vectors w with w = eta (mod L), e^T w = L, w^T w = L^2 and
// w^T A w = 0.  At most three entries of the shortest representative can
// move by +-L, which keeps the search tiny.
std::vector<SolutionVector> perfect_representatives(const ResidueVector& eta, const Graph& g,
                                                    const Int& L);

// Full pass: per-prime systems, Cartesian CRT (counted against the cap), and
// perfect representatives, deduplicated and sorted.  Every returned x is
// re-checked against all constraints.  The n trivial columns L*e_k are
// always present.
std::vector<SolutionVector> solve_master(const Graph& g, const WalkData& wd, const LevelBound& lb,
                                         uint64_t cap);

}  // namespace specmate
