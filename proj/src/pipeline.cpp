#include "specmate/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace specmate {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

}  // namespace

AnalysisReport analyze(const Graph& g, uint64_t cap) {
    AnalysisReport rep;
    rep.graph6 = g.n() <= 62 ? emit_graph6(g) : std::string();
    rep.n = g.n();
    rep.cap = cap;

    auto t_start = clock_type::now();
    auto t0 = t_start;

    WalkData wd = build_walk_data(g);
    rep.klass = wd.klass;
    rep.timings.walk_ms = ms_since(t0);

    if (wd.klass == Controllability::unsupported) {
        rep.status = Status::undecided;
        rep.reason = "unsupported: walk matrix rank below n-1";
        rep.timings.total_ms = ms_since(t_start);
        return rep;
    }

    t0 = clock_type::now();
    LevelBound lb = compute_level_bound(g, wd);
    rep.timings.level_ms = ms_since(t0);
    rep.level = lb;

    if (lb.factorization_incomplete) {
        rep.status = Status::undecided;
        rep.reason = "incomplete factorization: candidate screening stopped at cofactor " +
                     lb.unfactored.get_str();
        rep.timings.total_ms = ms_since(t_start);
        return rep;
    }

    std::vector<SolutionVector> solutions;
    try {
        t0 = clock_type::now();
        solutions = solve_master(g, wd, lb, cap);
        rep.timings.solve_ms = ms_since(t0);
    } catch (const cap_exceeded& e) {
        rep.timings.solve_ms = ms_since(t0);
        rep.status = Status::undecided;
        rep.reason = std::string("cap exceeded in ") + e.stage + ": " + e.what();
        rep.timings.total_ms = ms_since(t_start);
        return rep;
    }
    rep.solution_count = solutions.size();

    t0 = clock_type::now();
    OmegaGraph omega = build_omega(std::move(solutions), g, lb.L);
    rep.timings.omega_ms = ms_since(t0);
    rep.omega_vertices = omega.vertices.size();
    rep.omega_edges = omega.edge_count;
    rep.omega_complete = omega.complete || omega.vertices.size() == 1;

    t0 = clock_type::now();
    std::vector<std::vector<int>> cliques = enumerate_n_cliques(omega);
    rep.timings.cliques_ms = ms_since(t0);
    rep.clique_count = cliques.size();

    t0 = clock_type::now();
    Verdict verdict = render_verdict(g, wd.klass, omega, cliques);
    rep.timings.verdict_ms = ms_since(t0);

    rep.status = verdict.status;
    rep.original_cliques = verdict.original_cliques;
    rep.graph_asymmetric = verdict.graph_asymmetric;
    rep.mates = std::move(verdict.mates);
    rep.timings.total_ms = ms_since(t_start);
    return rep;
}

namespace {

struct DrawResult {
    Graph g;
    AnalysisReport report;
};

DrawResult analyze_draw(int n, uint64_t seed, uint64_t cap) {
    Graph g = random_gnp_half(n, seed);
    return {g, analyze(g, cap)};
}

}  // namespace

BatchSummary run_batch(int n, uint64_t count, uint64_t seed, uint64_t cap, int jobs) {
    if (jobs < 1) jobs = 1;
    BatchSummary sum;
    sum.n = n;
    sum.count = count;
    sum.seed = seed;
    sum.cap = cap;
    sum.jobs = jobs;

    uint64_t next_draw = 0;
    while (sum.rows.size() < count) {
        // analyze a chunk of draws in parallel, then consume them in draw
        // order; surplus acceptances beyond `count` are dropped, which keeps
        // the outcome independent of jobs
        uint64_t chunk = std::max<uint64_t>(static_cast<uint64_t>(jobs), 8);
        chunk = std::min<uint64_t>(chunk, count);  // no need to overshoot wildly
        std::vector<DrawResult> results;
        results.reserve(chunk);

        if (jobs == 1) {
            for (uint64_t k = 0; k < chunk; ++k)
                results.push_back(analyze_draw(n, seed + next_draw + k, cap));
        } else {
            std::vector<std::optional<DrawResult>> slot(chunk);
            std::vector<std::thread> pool;
            std::atomic<uint64_t> cursor{0};
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        uint64_t k = cursor.fetch_add(1);
                        if (k >= chunk) return;
                        slot[k] = analyze_draw(n, seed + next_draw + k, cap);
                    }
                });
            for (auto& th : pool) th.join();
            for (auto& s : slot) results.push_back(std::move(*s));
        }

        for (uint64_t k = 0; k < chunk && sum.rows.size() < count; ++k) {
            ++sum.draws;
            const AnalysisReport& rep = results[k].report;
            if (rep.klass == Controllability::unsupported) {
                ++sum.discarded_unsupported;
                continue;
            }
            BatchRow row;
            row.index = sum.rows.size();
            row.seed = seed + next_draw + k;
            row.graph6 = rep.graph6;
            row.klass = rep.klass;
            row.L = rep.level ? rep.level->L : Int(0);
            row.omega_vertices = rep.omega_vertices.value_or(0);
            row.clique_count = rep.clique_count.value_or(0);
            row.status = rep.status;
            row.reason = rep.reason;
            row.millis = rep.timings.total_ms;
            switch (rep.status) {
                case Status::dgs:
                    ++sum.dgs;
                    if (rep.omega_complete) ++sum.dgs_omega_complete;
                    break;
                case Status::non_dgs: ++sum.non_dgs; break;
                case Status::undecided: ++sum.undecided; break;
            }
            sum.rows.push_back(std::move(row));
        }
        next_draw += chunk;
    }
    return sum;
}

}  // namespace specmate
