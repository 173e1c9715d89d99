#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specmate/graph.hpp"
#include "specmate/level.hpp"
#include "specmate/omega.hpp"
#include "specmate/solver.hpp"
#include "specmate/walk.hpp"

namespace specmate {

inline constexpr uint64_t default_cap = 65536;

struct StageTimings {
    double walk_ms = 0, level_ms = 0, solve_ms = 0, omega_ms = 0, cliques_ms = 0, verdict_ms = 0,
           total_ms = 0;
};

struct AnalysisReport {
    std::string graph6;
    int n = 0;
    uint64_t cap = default_cap;
    Controllability klass = Controllability::unsupported;
    Status status = Status::undecided;
    std::string reason;  // why the run is undecided, empty otherwise

    std::optional<LevelBound> level;
    std::optional<size_t> solution_count;
    std::optional<size_t> omega_vertices;
    std::optional<size_t> omega_edges;
    bool omega_complete = false;
    std::optional<size_t> clique_count;
    size_t original_cliques = 0;
    bool graph_asymmetric = false;
    std::vector<MateClass> mates;

    StageTimings timings;
};

// Full decision pipeline for one graph.  Never throws on Unsupported /
// overflow / factorization trouble; those become Undecided with a reason.
AnalysisReport analyze(const Graph& g, uint64_t cap = default_cap);

struct BatchRow {
    uint64_t index = 0;  // position among accepted graphs
    uint64_t seed = 0;   // per-graph seed actually used
    std::string graph6;
    Controllability klass = Controllability::unsupported;
    Int L = 0;
    size_t omega_vertices = 0;
    size_t clique_count = 0;
    Status status = Status::undecided;
    std::string reason;
    double millis = 0;
};

struct BatchSummary {
    int n = 0;
    uint64_t count = 0;
    uint64_t seed = 0;
    uint64_t cap = default_cap;
    int jobs = 1;

    uint64_t draws = 0;  // random graphs generated, including discarded ones
    uint64_t discarded_unsupported = 0;
    uint64_t dgs = 0;
    uint64_t dgs_omega_complete = 0;
    uint64_t non_dgs = 0;
    uint64_t undecided = 0;

    std::vector<BatchRow> rows;

    double dgs_fraction() const { return count ? static_cast<double>(dgs) / static_cast<double>(count) : 0.0; }
    double non_dgs_fraction() const {
        return count ? static_cast<double>(non_dgs) / static_cast<double>(count) : 0.0;
    }
};

// count supported graphs from G(n, 1/2), seeds seed, seed+1, ... per draw.
// Unsupported draws are discarded (tallied).  jobs > 1 analyzes draws in
// parallel; results are merged in draw order, so output does not depend on
// the thread count.
BatchSummary run_batch(int n, uint64_t count, uint64_t seed, uint64_t cap = default_cap, int jobs = 1);

}  // namespace specmate
