#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specmate/bigint.hpp"
#include "specmate/graph.hpp"
#include "specmate/matrix.hpp"
#include "specmate/solver.hpp"

namespace specmate {

// Compatibility graph on the master solutions: two solutions are adjacent
// when they could sit in the same orthogonal column system (orthogonal to
// each other, and mixed quadratic form 0 or L^2).
struct OmegaGraph {
    std::vector<SolutionVector> vertices;
    Int L;
    int graph_order = 0;                     // n of the underlying graph
    std::vector<std::vector<uint64_t>> adj;  // bit rows
    size_t edge_count = 0;
    std::vector<int> trivial_vertices;       // indices of the columns of L*I
    bool complete = false;                   // every pair adjacent

    bool adjacent(int i, int j) const {
        return (adj[static_cast<size_t>(i)][static_cast<size_t>(j) / 64] >>
                (static_cast<size_t>(j) % 64)) & 1u;
    }
};

OmegaGraph build_omega(std::vector<SolutionVector> solutions, const Graph& g, const Int& L);

// All cliques of order exactly n (Bron-Kerbosch with pivoting; a complete
// Omega short-circuits).  Any clique beyond order n is a hard error.
std::vector<std::vector<int>> enumerate_n_cliques(const OmegaGraph& omega);

struct MateReport {
    std::vector<int> clique;  // vertex indices, ascending
    IntMat q_times_l;         // columns are the clique's solution vectors
    Int q_level;              // L / content of q_times_l
    Graph mate{1};
    std::string canon;
    bool is_original = false;
};

// Scale-first reconstruction: columns sorted by vertex index, all invariants
// checked before the 0/1 matrix is accepted.
MateReport clique_to_mate(const std::vector<int>& clique, const OmegaGraph& omega, const Graph& g);

enum class Status { dgs, non_dgs, undecided };

const char* to_string(Status s);

// One isomorphism class among the reconstructed mates.
struct MateClass {
    MateReport rep;        // first clique found for this class
    int multiplicity = 0;  // number of cliques mapping to the class
};

struct Verdict {
    Status status = Status::undecided;
    size_t clique_count = 0;
    size_t original_cliques = 0;         // cliques whose mate is the input itself
    bool graph_asymmetric = false;
    std::vector<MateClass> mates;        // non-isomorphic proper mates, canon order
};

// Applies the clique-count criterion and packages the distinct mates.
// Checks per-class multiplicities (2 for an asymmetric member, 1 otherwise,
// in the almost-controllable case) and generalized cospectrality of every
// emitted mate.
Verdict render_verdict(const Graph& g, Controllability klass, const OmegaGraph& omega,
                       const std::vector<std::vector<int>>& cliques);

}  // namespace specmate
