#include "specmate/omega.hpp"

#include <algorithm>
#include <bit>

#include "specmate/poly.hpp"

namespace specmate {

const char* to_string(Status s) {
    switch (s) {
        case Status::dgs: return "DGS";
        case Status::non_dgs: return "NonDGS";
        case Status::undecided: return "Undecided";
    }
    throw internal_error("to_string: bad Status");
}

namespace {

Int dot(const SolutionVector& a, const SolutionVector& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int mixed_form(const Graph& g, const SolutionVector& a, const SolutionVector& b) {
    Int s = 0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.edge(i, j))
                s += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] +
                     a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)];
    return s;
}

}  // namespace

OmegaGraph build_omega(std::vector<SolutionVector> solutions, const Graph& g, const Int& L) {
    OmegaGraph om;
    om.L = L;
    om.graph_order = g.n();
    om.vertices = std::move(solutions);
    size_t v = om.vertices.size();
    size_t words = (v + 63) / 64;
    om.adj.assign(v, std::vector<uint64_t>(words, 0));

    Int l2 = L * L;
    for (size_t i = 0; i < v; ++i)
        for (size_t j = i + 1; j < v; ++j) {
            if (dot(om.vertices[i], om.vertices[j]) != 0) continue;
            Int q = mixed_form(g, om.vertices[i], om.vertices[j]);
            if (q != 0 && q != l2) continue;
            om.adj[i][j / 64] |= uint64_t{1} << (j % 64);
            om.adj[j][i / 64] |= uint64_t{1} << (i % 64);
            ++om.edge_count;
        }
    om.complete = v >= 2 && om.edge_count == v * (v - 1) / 2;

    for (size_t i = 0; i < v; ++i) {
        int nonzero = 0;
        bool is_l = false;
        for (const Int& x : om.vertices[i])
            if (x != 0) {
                ++nonzero;
                is_l = x == L;
            }
        if (nonzero == 1 && is_l) om.trivial_vertices.push_back(static_cast<int>(i));
    }
    if (om.trivial_vertices.size() != static_cast<size_t>(g.n()))
        throw internal_error("build_omega: trivial vertex count is not n");
    for (size_t a = 0; a < om.trivial_vertices.size(); ++a)
        for (size_t b = a + 1; b < om.trivial_vertices.size(); ++b)
            if (!om.adjacent(om.trivial_vertices[a], om.trivial_vertices[b]))
                throw internal_error("build_omega: trivial vertices are not mutually compatible");
    return om;
}

namespace {

using Bits = std::vector<uint64_t>;

size_t count_bits(const Bits& b) {
    size_t c = 0;
    for (uint64_t w : b) c += static_cast<size_t>(std::popcount(w));
    return c;
}

bool any_bits(const Bits& b) {
    for (uint64_t w : b)
        if (w) return true;
    return false;
}

struct CliqueSearch {
    const OmegaGraph& om;
    int n;
    std::vector<std::vector<int>> found;
    std::vector<int> r;

    void run() {
        size_t v = om.vertices.size();
        size_t words = (v + 63) / 64;
        Bits p(words, 0), x(words, 0);
        for (size_t i = 0; i < v; ++i) p[i / 64] |= uint64_t{1} << (i % 64);
        expand(p, x);
    }

    void expand(Bits p, Bits x) {
        if (!any_bits(p) && !any_bits(x)) {
            if (r.size() == static_cast<size_t>(n)) {
                std::vector<int> clique = r;
                std::sort(clique.begin(), clique.end());
                found.push_back(std::move(clique));
            }
            return;
        }
        if (r.size() + count_bits(p) < static_cast<size_t>(n)) return;

        // pivot: u in P|X with the most neighbours inside P
        size_t words = p.size();
        int pivot = -1;
        size_t best = 0;
        for (size_t w = 0; w < words; ++w) {
            uint64_t both = p[w] | x[w];
            while (both) {
                int u = static_cast<int>(w * 64 + static_cast<size_t>(std::countr_zero(both)));
                both &= both - 1;
                size_t cnt = 0;
                for (size_t k = 0; k < words; ++k) cnt += static_cast<size_t>(std::popcount(p[k] & om.adj[static_cast<size_t>(u)][k]));
                if (pivot < 0 || cnt > best) {
                    pivot = u;
                    best = cnt;
                }
            }
        }

        for (size_t w = 0; w < words; ++w) {
            uint64_t cand = p[w] & ~om.adj[static_cast<size_t>(pivot)][w];
            while (cand) {
                int v = static_cast<int>(w * 64 + static_cast<size_t>(std::countr_zero(cand)));
                cand &= cand - 1;
                if (r.size() + 1 > static_cast<size_t>(n))
                    throw internal_error("enumerate_n_cliques: clique larger than n");
                Bits np(words), nx(words);
                for (size_t k = 0; k < words; ++k) {
                    np[k] = p[k] & om.adj[static_cast<size_t>(v)][k];
                    nx[k] = x[k] & om.adj[static_cast<size_t>(v)][k];
                }
                r.push_back(v);
                expand(std::move(np), std::move(nx));
                r.pop_back();
                p[w] &= ~(uint64_t{1} << (v % 64));
                x[w] |= uint64_t{1} << (v % 64);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_n_cliques(const OmegaGraph& omega) {
    size_t v = omega.vertices.size();
    int n = omega.graph_order;
    if (v < static_cast<size_t>(n)) throw internal_error("enumerate_n_cliques: fewer vertices than n");
    if (omega.complete || v == 1) {
        if (v != static_cast<size_t>(n))
            throw internal_error("enumerate_n_cliques: complete compatibility graph larger than n");
        std::vector<int> all(v);
        for (size_t i = 0; i < v; ++i) all[i] = static_cast<int>(i);
        return {all};
    }
    CliqueSearch cs{omega, n, {}, {}};
    cs.run();
    std::sort(cs.found.begin(), cs.found.end());
    return cs.found;
}

MateReport clique_to_mate(const std::vector<int>& clique, const OmegaGraph& omega, const Graph& g) {
    int n = g.n();
    if (static_cast<int>(clique.size()) != n) throw internal_error("clique_to_mate: clique order is not n");
    const Int& L = omega.L;

    MateReport rep;
    rep.clique = clique;
    std::sort(rep.clique.begin(), rep.clique.end());

    rep.q_times_l = IntMat(n, n);
    for (int c = 0; c < n; ++c) {
        const SolutionVector& col = omega.vertices[static_cast<size_t>(rep.clique[static_cast<size_t>(c)])];
        for (int i = 0; i < n; ++i) rep.q_times_l.at(i, c) = col[static_cast<size_t>(i)];
    }

    Int l2 = L * L;
    // columns orthogonal with norm L^2, column sums L
    for (int a = 0; a < n; ++a) {
        Int sum = 0;
        for (int i = 0; i < n; ++i) sum += rep.q_times_l.at(i, a);
        if (sum != L) throw internal_error("clique_to_mate: column sum is not L");
        for (int b = a; b < n; ++b) {
            Int s = 0;
            for (int i = 0; i < n; ++i) s += rep.q_times_l.at(i, a) * rep.q_times_l.at(i, b);
            if (s != (a == b ? l2 : Int(0)))
                throw internal_error("clique_to_mate: columns are not an orthogonal system");
        }
    }

    Int content = L;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) content = int_gcd(content, rep.q_times_l.at(i, j));
    rep.q_level = exact_div(L, content);

    // (QL)^T A (QL) must be L^2 times a 0/1 symmetric zero-diagonal matrix
    IntMat m = rep.q_times_l.transposed() * adjacency_matrix(g) * rep.q_times_l;
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int e = exact_div(m.at(i, j), l2);
            if (e != 0 && e != 1) throw internal_error("clique_to_mate: conjugated matrix is not 0/1");
            if (i == j && e != 0) throw internal_error("clique_to_mate: conjugated matrix has a loop");
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(e.get_si());
        }
    rep.mate = graph_from_matrix(rows);
    rep.canon = canonical_form(rep.mate);
    rep.is_original = rep.canon == canonical_form(g);
    return rep;
}

Verdict render_verdict(const Graph& g, Controllability klass, const OmegaGraph& omega,
                       const std::vector<std::vector<int>>& cliques) {
    if (klass == Controllability::unsupported)
        throw internal_error("render_verdict: unsupported walk class");
    Verdict v;
    v.clique_count = cliques.size();
    v.graph_asymmetric = is_asymmetric(g);

    bool trivial_found = false;
    for (const auto& c : cliques)
        if (c == omega.trivial_vertices) trivial_found = true;
    if (!trivial_found) throw internal_error("render_verdict: trivial clique not enumerated");

    std::vector<MateClass> classes;
    for (const auto& c : cliques) {
        MateReport rep = clique_to_mate(c, omega, g);
        if (rep.is_original) ++v.original_cliques;
        bool fresh = true;
        for (auto& cls : classes)
            if (cls.rep.canon == rep.canon) {
                ++cls.multiplicity;
                fresh = false;
                break;
            }
        if (fresh) classes.push_back({std::move(rep), 1});
    }

    size_t expected_original = 1;
    if (klass == Controllability::almost_controllable && v.graph_asymmetric) expected_original = 2;
    if (v.original_cliques != expected_original)
        throw internal_error("render_verdict: clique multiplicity of the input graph is off");

    IntPoly chi_g = char_poly(adjacency_matrix(g));
    IntPoly chi_gc = char_poly(adjacency_matrix(complement(g)));
    for (const auto& cls : classes) {
        size_t expected = 1;
        if (klass == Controllability::almost_controllable && is_asymmetric(cls.rep.mate)) expected = 2;
        if (static_cast<size_t>(cls.multiplicity) != expected)
            throw internal_error("render_verdict: mate multiplicity disagrees with symmetry");
        if (cls.rep.is_original) continue;
        // every emitted mate must share both spectra with the input
        if (!(char_poly(adjacency_matrix(cls.rep.mate)) == chi_g) ||
            !(char_poly(adjacency_matrix(complement(cls.rep.mate))) == chi_gc))
            throw internal_error("render_verdict: mate is not generalized cospectral");
    }

    for (auto& cls : classes)
        if (!cls.rep.is_original) v.mates.push_back(std::move(cls));
    std::sort(v.mates.begin(), v.mates.end(),
              [](const MateClass& a, const MateClass& b) { return a.rep.canon < b.rep.canon; });

    v.status = v.mates.empty() ? Status::dgs : Status::non_dgs;
    return v;
}

}  // namespace specmate
