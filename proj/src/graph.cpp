#include "specmate/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace specmate {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw parse_error("graph order must be at least 1");
    words_ = (static_cast<size_t>(n) + 63) / 64;
    rows_.assign(static_cast<size_t>(n) * words_, 0);
}

void Graph::set_edge(int i, int j, bool present) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        if (present) throw parse_error("self-loops are not allowed");
        return;
    }
    auto put = [&](int a, int b) {
        uint64_t& w = rows_[static_cast<size_t>(a) * words_ + static_cast<size_t>(b) / 64];
        uint64_t mask = uint64_t{1} << (static_cast<size_t>(b) % 64);
        if (present)
            w |= mask;
        else
            w &= ~mask;
    };
    put(i, j);
    put(j, i);
}

int Graph::degree(int i) const {
    check_vertex(i);
    int d = 0;
    for (size_t w = 0; w < words_; ++w) d += std::popcount(rows_[static_cast<size_t>(i) * words_ + w]);
    return d;
}

size_t Graph::edge_count() const {
    size_t total = 0;
    for (int i = 0; i < n_; ++i) total += static_cast<size_t>(degree(i));
    return total / 2;
}

Graph graph_from_matrix(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw parse_error("adjacency matrix is not square");
        for (int j = 0; j < n; ++j) {
            int v = rows[i][j];
            if (v != 0 && v != 1) throw parse_error("adjacency entries must be 0 or 1");
            if (i == j && v != 0) throw parse_error("adjacency diagonal must be zero");
            if (j < i && v != rows[j][i]) throw parse_error("adjacency matrix is not symmetric");
            if (j > i && v == 1) g.set_edge(i, j, true);
        }
    }
    return g;
}

Graph parse_adjacency(std::istream& in) {
    long long n;
    if (!(in >> n)) throw parse_error("adjacency file: missing vertex count");
    if (n < 1 || n > 4096) throw parse_error("adjacency file: vertex count out of range");
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            int v;
            if (!(in >> v)) {
                std::ostringstream msg;
                msg << "adjacency file: matrix ends early at row " << i << ", column " << j;
                throw parse_error(msg.str());
            }
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    return graph_from_matrix(rows);
}

namespace {

void bad_byte(const char* what, size_t offset) {
    std::ostringstream msg;
    msg << "graph6: " << what << " at byte " << offset;
    throw parse_error(msg.str());
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("graph6: empty string");
    unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw parse_error("graph6: multi-byte size headers are not supported (n > 62)");
    if (header < 63 || header > 125) bad_byte("size header out of range", 0);
    int n = header - 63;
    if (n < 1) throw parse_error("graph6: empty graph of order 0 is not supported");

    size_t nbits = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (text.size() < 1 + nbytes) bad_byte("string truncated", text.size());
    if (text.size() > 1 + nbytes) bad_byte("trailing data", 1 + nbytes);

    Graph g(n);
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            size_t byte_idx = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(text[byte_idx]);
            if (c < 63 || c > 126) bad_byte("data byte out of range", byte_idx);
            unsigned val = c - 63;
            if ((val >> (5 - bit % 6)) & 1u) g.set_edge(i, j, true);
        }
    // zero padding is part of the format; reject anything else
    if (nbits % 6 != 0) {
        unsigned char last = static_cast<unsigned char>(text[nbytes]) - 63;
        unsigned pad_mask = (1u << (6 - nbits % 6)) - 1;
        if (last & pad_mask) bad_byte("nonzero padding bits", nbytes);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw parse_error("graph6: only orders up to 62 are supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.edge(i, j)) h.set_edge(i, j, true);
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n()) throw internal_error("relabel: bad permutation size");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= g.n() || seen[static_cast<size_t>(p)])
            throw internal_error("relabel: not a permutation");
        seen[static_cast<size_t>(p)] = true;
    }
    Graph h(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.edge(i, j)) h.set_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)], true);
    return h;
}

Graph random_gnp_half(int n, uint64_t seed) {
    std::mt19937_64 engine(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (engine() & 1u) g.set_edge(i, j, true);
    return g;
}

// ---------------------------------------------------------------------------
// canonical labeling via iterated refinement + individualization
// ---------------------------------------------------------------------------

namespace {

// One round of color refinement: split classes by the multiset of neighbor
// colors.  Repeats until stable.  Color ids are normalized to 0..k-1 in a
// way that depends only on the colored graph, not on vertex numbering.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    int n = g.n();
    for (;;) {
        // signature: old color + sorted list of neighbor colors
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<size_t>(v)];
            s.push_back(colors[static_cast<size_t>(v)]);
            for (int u = 0; u < n; ++u)
                if (g.edge(v, u)) s.push_back(colors[static_cast<size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::map<std::vector<int>, int> order;
        for (int v = 0; v < n; ++v) order.emplace(sig[static_cast<size_t>(v)], 0);
        int next = 0;
        for (auto& [key, id] : order) id = next++;
        std::vector<int> fresh(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) fresh[static_cast<size_t>(v)] = order[sig[static_cast<size_t>(v)]];
        if (fresh == colors) return colors;
        colors = std::move(fresh);
    }
}

bool is_discrete(const std::vector<int>& colors) {
    std::vector<bool> used(colors.size(), false);
    for (int c : colors) {
        if (used[static_cast<size_t>(c)]) return false;
        used[static_cast<size_t>(c)] = true;
    }
    return true;
}

// Smallest color id that labels more than one vertex, or -1 if discrete.
int first_split_class(const std::vector<int>& colors) {
    int n = static_cast<int>(colors.size());
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int c : colors) ++count[static_cast<size_t>(c)];
    for (int c = 0; c < n; ++c)
        if (count[static_cast<size_t>(c)] > 1) return c;
    return -1;
}

// Make v the sole member of its class, ordered before its former classmates.
std::vector<int> individualize(const std::vector<int>& colors, int v) {
    std::vector<int> out(colors.size());
    int cv = colors[static_cast<size_t>(v)];
    for (size_t u = 0; u < colors.size(); ++u) {
        int c = colors[u];
        out[u] = c + (c > cv || (c == cv && static_cast<int>(u) != v) ? 1 : 0);
    }
    return out;
}

std::string leaf_string(const Graph& g, const std::vector<int>& colors) {
    return emit_graph6(relabel(g, colors));
}

void canon_search(const Graph& g, std::vector<int> colors, std::optional<std::string>& best) {
    colors = refine_colors(g, colors);
    int cls = first_split_class(colors);
    if (cls < 0) {
        std::string s = leaf_string(g, colors);
        if (!best || s < *best) best = std::move(s);
        return;
    }
    for (int v = 0; v < g.n(); ++v)
        if (colors[static_cast<size_t>(v)] == cls) canon_search(g, individualize(colors, v), best);
}

// Depth-first search for a color-preserving, adjacency-preserving bijection
// other than the identity.  image[v] = -1 while unassigned.
bool automorphism_dfs(const Graph& g, const std::vector<int>& colors, std::vector<int>& image, int v,
                      bool all_fixed_so_far) {
    int n = g.n();
    if (v == n) return !all_fixed_so_far;
    std::vector<bool> taken(static_cast<size_t>(n), false);
    for (int u = 0; u < v; ++u) taken[static_cast<size_t>(image[static_cast<size_t>(u)])] = true;
    // identity images first: the pure-identity leaf is rejected at depth n,
    // after which the search backtracks into genuinely different mappings
    std::vector<int> candidates;
    if (!taken[static_cast<size_t>(v)]) candidates.push_back(v);
    for (int w = 0; w < n; ++w)
        if (w != v && !taken[static_cast<size_t>(w)] &&
            colors[static_cast<size_t>(w)] == colors[static_cast<size_t>(v)])
            candidates.push_back(w);
    for (int w : candidates) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.edge(u, v) != g.edge(image[static_cast<size_t>(u)], w)) ok = false;
        if (!ok) continue;
        image[static_cast<size_t>(v)] = w;
        if (automorphism_dfs(g, colors, image, v + 1, all_fixed_so_far && w == v)) return true;
    }
    image[static_cast<size_t>(v)] = -1;
    return false;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    std::optional<std::string> best;
    canon_search(g, std::vector<int>(static_cast<size_t>(g.n()), 0), best);
    if (!best) throw internal_error("canonical_form: search produced no leaf");
    return *best;
}

bool is_asymmetric(const Graph& g) {
    std::vector<int> colors = refine_colors(g, std::vector<int>(static_cast<size_t>(g.n()), 0));
    // discrete refinement already pins every vertex
    if (is_discrete(colors)) return true;
    std::vector<int> image(static_cast<size_t>(g.n()), -1);
    return !automorphism_dfs(g, colors, image, 0, true);
}

}  // namespace specmate
