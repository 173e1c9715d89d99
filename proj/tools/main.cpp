#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "specmate/pipeline.hpp"
#include "specmate/report.hpp"

namespace {

constexpr int exit_dgs = 0;
constexpr int exit_non_dgs = 1;
constexpr int exit_undecided = 2;
constexpr int exit_input_error = 64;
constexpr int exit_bug = 70;

int status_code(specmate::Status s) {
    switch (s) {
        case specmate::Status::dgs: return exit_dgs;
        case specmate::Status::non_dgs: return exit_non_dgs;
        case specmate::Status::undecided: return exit_undecided;
    }
    return exit_bug;
}

uint64_t cap_from_env() {
    const char* env = std::getenv("SPECMATE_CAP");
    if (!env || !*env) return specmate::default_cap;
    try {
        size_t used = 0;
        std::string text(env);
        unsigned long long v = std::stoull(text, &used);
        if (used != text.size() || v == 0) throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw specmate::parse_error("SPECMATE_CAP must be a positive integer");
    }
}

specmate::Graph load_graph(const std::string& graph6, const std::string& adj_path) {
    if (!graph6.empty()) return specmate::parse_graph6(graph6);
    std::ifstream in(adj_path);
    if (!in) throw specmate::parse_error("cannot open adjacency file: " + adj_path);
    return specmate::parse_adjacency(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized-spectrum determination for controllable and almost controllable graphs"};
    app.require_subcommand(1);

    std::string graph6, adj_path, out_path, csv_path, json_path;
    uint64_t cap = 0;  // 0 = use env/default
    bool as_json = false;
    int n = 0;
    uint64_t count = 0, seed = 0;
    int jobs = 1;

    auto add_input = [&](CLI::App* cmd) {
        auto* a = cmd->add_option("--graph6", graph6, "graph6 string (n <= 62)");
        auto* b = cmd->add_option("--adj", adj_path, "adjacency matrix file: n, then n 0/1 rows");
        a->excludes(b);
        b->excludes(a);
        cmd->add_option("--cap", cap, "enumeration cap (default 65536 or SPECMATE_CAP)");
    };

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "decide DGS / NonDGS for one graph");
    add_input(cmd_analyze);
    cmd_analyze->add_flag("--json", as_json, "emit a JSON report");

    CLI::App* cmd_mates = app.add_subcommand("mates", "list generalized cospectral mates, one graph6 per line");
    add_input(cmd_mates);
    cmd_mates->add_option("--out", out_path, "write mates to this file instead of stdout");

    CLI::App* cmd_batch = app.add_subcommand("batch", "random-graph survey at G(n, 1/2)");
    cmd_batch->add_option("--n", n, "graph order")->required();
    cmd_batch->add_option("--count", count, "number of supported graphs to analyze")->required();
    cmd_batch->add_option("--seed", seed, "base seed; draw k uses seed+k");
    cmd_batch->add_option("--cap", cap, "enumeration cap (default 65536 or SPECMATE_CAP)");
    cmd_batch->add_option("--csv", csv_path, "write per-graph rows to a CSV file");
    cmd_batch->add_option("--json", json_path, "write the full summary to a JSON file");
    cmd_batch->add_option("--jobs", jobs, "worker threads (deterministic output regardless)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return exit_input_error;
    }

    try {
        if (cap == 0) cap = cap_from_env();

        if (cmd_analyze->parsed() || cmd_mates->parsed()) {
            if (graph6.empty() && adj_path.empty())
                throw specmate::parse_error("one of --graph6 or --adj is required");
            specmate::Graph g = load_graph(graph6, adj_path);
            specmate::AnalysisReport rep = specmate::analyze(g, cap);

            if (cmd_analyze->parsed()) {
                if (as_json)
                    std::cout << specmate::report_to_json(rep).dump(2) << "\n";
                else
                    std::cout << specmate::report_to_text(rep);
            } else {
                std::ostream* out = &std::cout;
                std::ofstream file;
                if (!out_path.empty()) {
                    file.open(out_path);
                    if (!file) throw specmate::parse_error("cannot open output file: " + out_path);
                    out = &file;
                }
                for (const auto& mc : rep.mates)
                    *out << specmate::emit_graph6(mc.rep.mate) << "\n";
                if (rep.status == specmate::Status::undecided)
                    std::cerr << "undecided: " << rep.reason << "\n";
            }
            return status_code(rep.status);
        }

        // batch
        if (n < 1 || n > 62) throw specmate::parse_error("batch: --n must be in 1..62");
        specmate::BatchSummary sum = specmate::run_batch(n, count, seed, cap, jobs);
        std::cout << specmate::batch_to_text(sum);
        if (!csv_path.empty()) {
            std::ofstream file(csv_path);
            if (!file) throw specmate::parse_error("cannot open CSV file: " + csv_path);
            specmate::batch_to_csv(file, sum);
        }
        if (!json_path.empty()) {
            std::ofstream file(json_path);
            if (!file) throw specmate::parse_error("cannot open JSON file: " + json_path);
            file << specmate::batch_to_json(sum).dump(2) << "\n";
        }
        return 0;
    } catch (const specmate::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const specmate::internal_error& e) {
        std::cerr << "internal error (bug): " << e.what() << "\n";
        return exit_bug;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bug;
    }
}
