#pragma once

#include <vector>

#include "specmate/bigint.hpp"
#include "specmate/graph.hpp"
#include "specmate/matrix.hpp"

namespace specmate {

enum class Controllability { controllable, almost_controllable, unsupported };

const char* to_string(Controllability c);

// Walk matrix W = [e, Ae, ..., A^(n-1)e] plus the classification that the
// whole pipeline branches on.  xi is the left-kernel cofactor vector, filled
// only in the almost-controllable case (where rank W = n-1).
struct WalkData {
    IntMat W;
    Controllability klass = Controllability::unsupported;
    std::vector<Int> xi;  // empty unless almost_controllable
};

WalkData build_walk_data(const Graph& g);

// The nonsingular matrix whose last invariant factor bounds the level:
// W itself when controllable; with the last column replaced by
// (-1)^delta * xi / 2^(floor(n/2)-1) when almost controllable.
IntMat base_walk_matrix(const WalkData& wd, int delta = 0);

// Deflated walk matrix at p: the first s = deg f columns of W stay, the rest
// are replaced by the iterates of u = f(A)e / p where f is the degree-minimal
// polynomial from main_polynomial().  In the almost-controllable case the
// last column instead carries xi scaled down by lcm(2^(floor(n/2)-1),
// p^(n-1-s)).  Every division is checked.
IntMat modified_walk_matrix(const WalkData& wd, const Graph& g, const Int& p, int delta = 0);

// v -> Av without forming powers of A.
std::vector<Int> apply_adjacency(const Graph& g, const std::vector<Int>& v);

}  // namespace specmate
