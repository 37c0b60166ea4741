#ifndef MIM_HARNESS_HPP
#define MIM_HARNESS_HPP

#include <chrono>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mim/solver.hpp"

namespace mim {

enum class ExactStatus { proved_optimal, budget_lower_bound };
enum class RowStatus { match, formula_below_exact, formula_above_exact, unknown };

const char* to_string(ExactStatus s);
const char* to_string(RowStatus s);

// One (m, n) instance: solver value, formula values, construction size,
// and the mechanical verdict comparing them.
struct BoundReport {
    int m = 0;
    int n = 0;
    int vertices = 0;
    int edges = 0;
    std::optional<int> exact;
    ExactStatus exact_status = ExactStatus::proved_optimal;
    std::optional<int> formula_exact;
    std::optional<int> formula_lb;
    std::optional<int> conjecture;
    int construction_achieved = 0;
    std::string construction_scheme;
    bool construction_valid = false;
    RowStatus status = RowStatus::unknown;
    long long elapsed_ms = 0;
};

BoundReport solve_instance(int m, int n, Budget budget);

struct SweepConfig {
    int m_lo = 3, m_hi = 3;
    int n_lo = 1, n_hi = 1;
    std::chrono::duration<double> budget{30.0};
    int workers = 1;
};

// One row per (m, n), m-major order; rows run on a bounded worker pool but
// the output order never depends on the worker count.
std::vector<BoundReport> run_sweep(const SweepConfig& config);

// Fixed schema; elapsed_ms is the only column excluded from determinism.
void write_csv(std::span<const BoundReport> rows, std::ostream& out);

struct SuiteResult {
    int checks = 0;
    int failures = 0;
    int unknown = 0;  // budget-exhausted rows, not counted as failures

    bool passed() const { return failures == 0; }
};

// Solver vs closed forms: paths n in [2,20], cycles [3,20], stars [2,12],
// 3-row grids [1,10], books [3,book_m_max] x [1,min(book_n_max,5)].
SuiteResult verify_theorems(int book_m_max, int book_n_max, Budget budget, std::ostream& out);

// Saturation lemmas on the 4- and 5-column books, m in [3, m_max]:
// forced middle-center saturation caps the matching at 2m-3, every
// maximum leaves the three middle centers unsaturated, and forcing the
// full middle cross family caps the matching at m-1.
SuiteResult verify_lemmas(int m_max, Budget budget, std::ostream& out);

// Reports conjectured values against solver values for n >= 6; never a
// failing suite, verdicts are informational.
SuiteResult verify_conjectures(int m_max, int n_max, Budget budget, std::ostream& out);

// Witness serialization: edge-list format plus `w <u> <v>` lines and a
// `# scheme <name>` comment.
void write_witness(const Graph& g, const Matching& m, const std::string& scheme,
                   std::ostream& out);

}  // namespace mim

#endif
