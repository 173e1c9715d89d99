#include "specmate/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace specmate {

using nlohmann::json;

namespace {

json level_to_json(const LevelBound& lb) {
    json j;
    j["d"] = lb.d.get_str();
    j["snf_last_invariants"] = json::array();
    for (const Int& x : lb.base_snf) j["snf_last_invariants"].push_back(x.get_str());
    j["discriminant"] = lb.disc.get_str();
    j["candidate_gcd"] = lb.candidate_gcd.get_str();
    j["L"] = lb.L.get_str();
    j["potential_primes"] = json::array();
    for (const auto& pp : lb.primes)
        j["potential_primes"].push_back(
            {{"p", pp.p.get_str()}, {"t", pp.t}, {"dn_deflated", pp.dn_deflated.get_str()}});
    j["eliminated_primes"] = json::array();
    for (const auto& ep : lb.eliminated)
        j["eliminated_primes"].push_back({{"p", ep.p.get_str()}, {"rule", ep.rule}});
    j["factorization_incomplete"] = lb.factorization_incomplete;
    if (lb.factorization_incomplete) j["unfactored"] = lb.unfactored.get_str();
    return j;
}

json mate_to_json(const MateClass& mc) {
    json j;
    j["graph6"] = emit_graph6(mc.rep.mate);
    j["canonical"] = mc.rep.canon;
    j["multiplicity"] = mc.multiplicity;
    j["q_level"] = mc.rep.q_level.get_str();
    j["clique"] = mc.rep.clique;
    return j;
}

}  // namespace

json report_to_json(const AnalysisReport& rep) {
    json j;
    j["schema_version"] = 1;
    j["graph6"] = rep.graph6;
    j["n"] = rep.n;
    j["cap"] = rep.cap;
    j["controllability"] = to_string(rep.klass);
    j["verdict"] = to_string(rep.status);
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    if (rep.level) j["level_bound"] = level_to_json(*rep.level);
    if (rep.solution_count) j["solution_count"] = *rep.solution_count;
    if (rep.omega_vertices) {
        j["omega"] = {{"vertices", *rep.omega_vertices},
                      {"edges", *rep.omega_edges},
                      {"complete", rep.omega_complete}};
    }
    if (rep.clique_count) {
        j["clique_count"] = *rep.clique_count;
        j["original_cliques"] = rep.original_cliques;
        j["graph_asymmetric"] = rep.graph_asymmetric;
    }
    j["mates"] = json::array();
    for (const auto& mc : rep.mates) j["mates"].push_back(mate_to_json(mc));
    j["timings_ms"] = {{"walk", rep.timings.walk_ms},     {"level", rep.timings.level_ms},
                       {"solve", rep.timings.solve_ms},   {"omega", rep.timings.omega_ms},
                       {"cliques", rep.timings.cliques_ms}, {"verdict", rep.timings.verdict_ms},
                       {"total", rep.timings.total_ms}};
    return j;
}

json batch_to_json(const BatchSummary& sum) {
    json j;
    j["schema_version"] = 1;
    j["n"] = sum.n;
    j["count"] = sum.count;
    j["seed"] = sum.seed;
    j["cap"] = sum.cap;
    j["jobs"] = sum.jobs;
    j["draws"] = sum.draws;
    j["discarded_unsupported"] = sum.discarded_unsupported;
    j["dgs"] = sum.dgs;
    j["dgs_omega_complete"] = sum.dgs_omega_complete;
    j["non_dgs"] = sum.non_dgs;
    j["undecided"] = sum.undecided;
    j["dgs_fraction"] = sum.dgs_fraction();
    j["non_dgs_fraction"] = sum.non_dgs_fraction();
    j["rows"] = json::array();
    for (const auto& r : sum.rows) {
        json row;
        row["index"] = r.index;
        row["seed"] = r.seed;
        row["graph6"] = r.graph6;
        row["controllability"] = to_string(r.klass);
        row["L"] = r.L.get_str();
        row["omega_vertices"] = r.omega_vertices;
        row["clique_count"] = r.clique_count;
        row["verdict"] = to_string(r.status);
        if (!r.reason.empty()) row["reason"] = r.reason;
        row["millis"] = r.millis;
        j["rows"].push_back(std::move(row));
    }
    return j;
}

std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "graph6: " << rep.graph6 << "\n";
    out << "n: " << rep.n << "\n";
    out << "controllability: " << to_string(rep.klass) << "\n";
    if (rep.level) {
        const LevelBound& lb = *rep.level;
        out << "d_n: " << lb.d.get_str() << "\n";
        out << "discriminant: " << lb.disc.get_str() << "\n";
        out << "gcd(disc, d_n): " << lb.candidate_gcd.get_str() << "\n";
        out << "L: " << lb.L.get_str();
        if (!lb.primes.empty()) {
            out << " =";
            for (const auto& pp : lb.primes) out << " " << pp.p.get_str() << "^" << pp.t;
        }
        out << "\n";
    }
    if (rep.solution_count) out << "solutions: " << *rep.solution_count << "\n";
    if (rep.omega_vertices)
        out << "omega: " << *rep.omega_vertices << " vertices, " << *rep.omega_edges << " edges"
            << (rep.omega_complete ? " (complete)" : "") << "\n";
    if (rep.clique_count) out << "cliques: " << *rep.clique_count << "\n";
    for (const auto& mc : rep.mates)
        out << "mate: " << emit_graph6(mc.rep.mate) << " (multiplicity " << mc.multiplicity << ")\n";
    out << "verdict: " << to_string(rep.status) << "\n";
    if (!rep.reason.empty()) out << "reason: " << rep.reason << "\n";
    return out.str();
}

std::string batch_to_text(const BatchSummary& sum) {
    std::ostringstream out;
    out << "n=" << sum.n << " count=" << sum.count << " seed=" << sum.seed << " cap=" << sum.cap
        << "\n";
    out << "draws: " << sum.draws << " (discarded unsupported: " << sum.discarded_unsupported
        << ")\n";
    out << "DGS: " << sum.dgs << " (" << std::fixed << std::setprecision(4) << sum.dgs_fraction()
        << "), omega complete among them: " << sum.dgs_omega_complete << "\n";
    out << "NonDGS: " << sum.non_dgs << " (" << std::setprecision(4) << sum.non_dgs_fraction()
        << ")\n";
    out << "Undecided: " << sum.undecided << "\n";
    return out.str();
}

void batch_to_csv(std::ostream& out, const BatchSummary& sum, bool with_millis) {
    out << "index,seed,graph6,controllability,L,omega_vertices,clique_count,verdict";
    if (with_millis) out << ",millis";
    out << "\n";
    for (const auto& r : sum.rows) {
        out << r.index << "," << r.seed << "," << r.graph6 << "," << to_string(r.klass) << ","
            << r.L.get_str() << "," << r.omega_vertices << "," << r.clique_count << ","
            << to_string(r.status);
        if (with_millis) out << "," << std::fixed << std::setprecision(3) << r.millis;
        out << "\n";
    }
}

}  // namespace specmate
