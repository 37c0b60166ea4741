#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mim/constructions.hpp"
#include "mim/families.hpp"
#include "mim/formulas.hpp"
#include "mim/harness.hpp"
#include "mim/solver.hpp"

namespace {

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int single = std::stoi(text);
            return {single, single};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected <a>..<b> or a single integer, got `" +
                                                text + "`");
    }
}

int run_solve(const std::string& path, const std::string& method, bool witness, double budget_s) {
    mim::Graph g = mim::read_edge_list_file(path);
    mim::Matching result;
    bool optimal = false;
    if (method == "brute") {
        result = mim::im_bruteforce(g);
        optimal = true;
    } else if (method == "greedy") {
        result = mim::greedy_lower_bound(g);
        optimal = false;
    } else {
        mim::SolveResult solved = mim::im_exact(g, std::chrono::duration<double>(budget_s));
        result = std::move(solved.matching);
        optimal = solved.optimal;
    }
    std::cout << "size " << result.size() << "\n";
    std::cout << "optimal " << (optimal ? "true" : "false") << "\n";
    if (witness) {
        for (mim::EdgeId id : result.edge_ids) {
            auto [u, v] = g.edge(id);
            std::cout << "w " << u << " " << v << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact maximum-induced-matching toolkit for stacked-book graphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a family graph as an edge-list file");
    std::string family_text;
    std::string gen_out;
    gen->add_option("--family", family_text,
                    "family spec: path:<n>, cycle:<n>, star:<m>, grid3:<n>, book:<m>x<n>")
        ->required();
    gen->add_option("-o,--output", gen_out, "output edge-list file")->required();

    auto* solve = app.add_subcommand("solve", "compute a maximum induced matching of a graph file");
    std::string solve_path;
    std::string method = "exact";
    bool witness = false;
    double solve_budget = 30.0;
    solve->add_option("file", solve_path, "edge-list input")->required();
    solve->add_option("--method", method, "exact | brute | greedy")
        ->check(CLI::IsMember({"exact", "brute", "greedy"}));
    solve->add_flag("--witness", witness, "print the witness edge list");
    solve->add_option("--budget-s", solve_budget, "time budget in seconds (exact method)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int m_max = -1;
    int n_max = -1;
    double verify_budget = 30.0;
    verify->add_option("--suite", suite, "theorems | lemmas | conjectures")
        ->required()
        ->check(CLI::IsMember({"theorems", "lemmas", "conjectures"}));
    verify->add_option("--m-max", m_max, "largest book m (defaults per suite)");
    verify->add_option("--n-max", n_max, "largest book n (defaults per suite)");
    verify->add_option("--budget-s", verify_budget, "per-instance time budget in seconds");

    auto* sweep = app.add_subcommand("sweep", "solve a grid of (m, n) instances into a CSV");
    std::string m_range_text, n_range_text, csv_path;
    double sweep_budget = 30.0;
    int workers = 1;
    sweep->add_option("--m", m_range_text, "m range, e.g. 3..6")->required();
    sweep->add_option("--n", n_range_text, "n range, e.g. 2..8")->required();
    sweep->add_option("--csv", csv_path, "output CSV file")->required();
    sweep->add_option("--budget-s", sweep_budget, "per-instance time budget in seconds");
    sweep->add_option("--workers", workers, "worker count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            mim::FamilySpec spec = mim::FamilySpec::parse(family_text);
            mim::Graph g = spec.build();
            mim::write_edge_list_file(g, gen_out);
            std::cout << "wrote " << gen_out << " (" << g.vertex_count() << " vertices, "
                      << g.edge_count() << " edges)\n";
            return 0;
        }
        if (solve->parsed()) return run_solve(solve_path, method, witness, solve_budget);
        if (verify->parsed()) {
            mim::Budget budget = std::chrono::duration<double>(verify_budget);
            mim::SuiteResult result;
            if (suite == "theorems") {
                result = mim::verify_theorems(m_max < 0 ? 6 : m_max, n_max < 0 ? 5 : n_max,
                                              budget, std::cout);
            } else if (suite == "lemmas") {
                result = mim::verify_lemmas(m_max < 0 ? 4 : m_max, budget, std::cout);
            } else {
                result = mim::verify_conjectures(m_max < 0 ? 3 : m_max, n_max < 0 ? 7 : n_max,
                                                 budget, std::cout);
                return 0;  // reporting suite never fails
            }
            return result.passed() ? 0 : 1;
        }
        if (sweep->parsed()) {
            mim::SweepConfig config;
            std::tie(config.m_lo, config.m_hi) = parse_range(m_range_text);
            std::tie(config.n_lo, config.n_hi) = parse_range(n_range_text);
            config.budget = std::chrono::duration<double>(sweep_budget);
            config.workers = workers;
            auto rows = mim::run_sweep(config);
            std::ofstream out(csv_path);
            if (!out) throw std::runtime_error("cannot open " + csv_path + " for writing");
            mim::write_csv(rows, out);
            std::cout << "wrote " << csv_path << " (" << rows.size() << " rows)\n";
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
