#pragma once

// Hand-checked fixture data for the two worked reference graphs used across
// the test suites, plus small helpers to build them.

#include <algorithm>
#include <string>
#include <vector>

#include "specmate/bigint.hpp"
#include "specmate/graph.hpp"
#include "specmate/solver.hpp"

namespace golden {

inline const std::vector<std::vector<int>> ex1_rows = {
    {0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0},
    {1, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1},
    {0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0},
    {0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0},
    {1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1},
    {0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0},
    {1, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0},
};

// the two non-isomorphic cospectral companions printed for ex1
inline const std::vector<std::vector<int>> ex1_mate_a_rows = {
    {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1},
    {0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1},
    {1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1},
    {0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1},
    {0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 1},
    {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1},
    {1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0},
    {1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
};

inline const std::vector<std::vector<int>> ex1_mate_b_rows = {
    {0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
    {1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1},
    {0, 1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
    {0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1},
    {1, 0, 1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1},
    {0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0},
};

// nontrivial master solutions for ex1 at L = 12; the other 13 are 12*e_k
inline const std::vector<std::vector<int>> ex1_nontrivial_solutions = {
    {0, 0, 4, 0, 0, 8, 4, 0, 0, 0, 4, -4, -4},
    {0, 0, 4, 0, 0, -4, 4, 0, 0, 0, 4, 8, -4},
    {0, 0, 4, 0, 0, -4, 4, 0, 0, 0, 4, -4, 8},
    {0, 0, 8, 0, 0, 4, -4, 0, 0, 0, -4, 4, 4},
    {0, 0, -4, 0, 0, 4, 8, 0, 0, 0, -4, 4, 4},
    {0, 0, -4, 0, 0, 4, -4, 0, 0, 0, 8, 4, 4},
    {0, -6, -2, 0, 6, 2, 4, 6, 0, 0, -2, 2, 2},
    {0, 6, -2, 0, -6, 2, 4, 6, 0, 0, -2, 2, 2},
    {0, 6, -2, 0, 6, 2, 4, -6, 0, 0, -2, 2, 2},
    {0, 6, 2, 0, 6, -2, -4, 6, 0, 0, 2, -2, -2},
};

inline const std::vector<std::vector<int>> ex2_rows = {
    {0, 1, 1, 1, 1, 0, 1, 1, 1},
    {1, 0, 1, 0, 1, 1, 0, 0, 0},
    {1, 1, 0, 1, 0, 1, 1, 0, 0},
    {1, 0, 1, 0, 1, 0, 0, 1, 0},
    {1, 1, 0, 1, 0, 1, 0, 1, 0},
    {0, 1, 1, 0, 1, 0, 1, 0, 0},
    {1, 0, 1, 0, 0, 1, 0, 1, 0},
    {1, 0, 0, 1, 1, 0, 1, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, 1, 0},
};

// master solutions for ex2 at L = 128, divided by 16 (so entries sum to 8)
inline const std::vector<std::vector<int>> ex2_solutions_16th = {
    {8, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 8, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 8, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 8, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 8, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 8, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 8, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 8, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 8},
    {2, 2, 2, 0, 6, -2, -2, -2, 2},
    {2, 2, 2, 0, -2, 6, -2, -2, 2},
    {2, 2, 2, 0, -2, -2, 6, -2, 2},
    {2, 2, 2, 0, -2, -2, -2, 6, 2},
    {6, -2, -2, 0, 2, 2, 2, 2, -2},
    {-2, 6, -2, 0, 2, 2, 2, 2, -2},
    {-2, -2, 6, 0, 2, 2, 2, 2, -2},
    {-2, -2, -2, 0, 2, 2, 2, 2, 6},
    {4, -2, -2, 4, 4, 0, 0, -2, 2},
    {0, 2, 2, 4, 0, -4, 4, 2, -2},
    {0, 2, 2, 4, 0, 4, -4, 2, -2},
    {-4, 0, 0, 0, 4, 4, 4, 0, 0},
    {4, 0, 0, 0, -4, 4, 4, 0, 0},
    {4, 0, 0, 0, 4, -4, 4, 0, 0},
    {4, 0, 0, 0, 4, 4, -4, 0, 0},
    {0, -4, 4, 0, 0, 0, 0, 4, 4},
    {0, 4, -4, 0, 0, 0, 0, 4, 4},
    {0, 4, 4, 0, 0, 0, 0, -4, 4},
    {0, 4, 4, 0, 0, 0, 0, 4, -4},
    {-2, -2, -2, 0, 2, 6, 2, 2, 2},
    {2, 2, 2, 0, -2, 2, -2, -2, 6},
    {-2, 4, 4, 4, 2, -2, -2, 0, 0},
    {2, 0, 0, 4, -2, 2, 2, 4, -4},
    {-4, 2, 2, 4, 4, 0, 0, 2, -2},
    {4, 2, 2, -4, 4, 0, 0, 2, -2},
    {4, 2, 2, 4, -4, 0, 0, 2, -2},
    {-1, -1, -1, 4, 1, 3, -3, 5, 1},
    {1, 1, 1, 4, -1, 1, -5, 3, 3},
};

inline specmate::Graph make(const std::vector<std::vector<int>>& rows) {
    return specmate::graph_from_matrix(rows);
}

inline specmate::Graph ex1() { return make(ex1_rows); }
inline specmate::Graph ex2() { return make(ex2_rows); }

inline specmate::SolutionVector to_solution(const std::vector<int>& v, int scale = 1) {
    specmate::SolutionVector s;
    for (int x : v) s.push_back(specmate::Int(x) * scale);
    return s;
}

// full expected master solution set: scale * rows plus trivial L*e_k
inline std::vector<specmate::SolutionVector> expected_solutions(
    const std::vector<std::vector<int>>& nontrivial, int n, const specmate::Int& L, int scale) {
    std::vector<specmate::SolutionVector> out;
    for (int k = 0; k < n; ++k) {
        specmate::SolutionVector v(static_cast<size_t>(n), specmate::Int(0));
        v[static_cast<size_t>(k)] = L;
        out.push_back(std::move(v));
    }
    for (const auto& row : nontrivial) {
        bool trivial = false;
        int nonzero = 0;
        for (int x : row)
            if (x != 0) ++nonzero;
        if (nonzero == 1) trivial = true;  // already covered by the L*e_k block
        if (!trivial) out.push_back(to_solution(row, scale));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace golden
