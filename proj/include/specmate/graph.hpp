#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "specmate/errors.hpp"

namespace specmate {

// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows.
// Treat instances as values: build once, then query.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }

    bool edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return (rows_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] >>
                (static_cast<size_t>(j) % 64)) & 1u;
    }

    void set_edge(int i, int j, bool present);
    int degree(int i) const;
    size_t edge_count() const;

    // Row i as bit words (words_per_row() entries of 64 bits each).
    const uint64_t* row_bits(int i) const { return rows_.data() + static_cast<size_t>(i) * words_; }
    int words_per_row() const { return static_cast<int>(words_); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw internal_error("Graph: vertex out of range");
    }

    int n_;
    size_t words_;
    std::vector<uint64_t> rows_;
};

// --- construction helpers ---

// rows must be an n x n symmetric 0/1 matrix with zero diagonal.
Graph graph_from_matrix(const std::vector<std::vector<int>>& rows);

// "n\n<row>\n..." adjacency text as described in the README; throws parse_error.
Graph parse_adjacency(std::istream& in);

// graph6 string (single-byte size header, so n <= 62).  Strict: padding bits
// must be zero and no trailing bytes are allowed.  Errors name a byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

Graph complement(const Graph& g);

// perm[i] = new position of vertex i.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// G(n, 1/2): each pair i<j (lexicographic order) takes the low bit of the
// next std::mt19937_64 output.  Same (n, seed) gives the same graph anywhere.
Graph random_gnp_half(int n, uint64_t seed);

// Isomorphism-invariant byte string: the graph6 encoding of a canonical
// relabeling.  canonical_form(g) == canonical_form(h) iff g and h are
// isomorphic.
std::string canonical_form(const Graph& g);

// True iff the only automorphism is the identity.
bool is_asymmetric(const Graph& g);

}  // namespace specmate
