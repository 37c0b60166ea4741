#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mim/families.hpp"
#include "mim/harness.hpp"

using namespace mim;

namespace {

// CSV rows with the elapsed_ms column stripped.
std::vector<std::string> stable_rows(const std::vector<BoundReport>& rows) {
    std::ostringstream out;
    write_csv(rows, out);
    std::vector<std::string> lines;
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line)) {
        auto last_comma = line.rfind(',');
        lines.push_back(line.substr(0, last_comma));
    }
    return lines;
}

}  // namespace

TEST_CASE("solve_instance fills a consistent row") {
    BoundReport row = solve_instance(4, 3, {});
    CHECK(row.m == 4);
    CHECK(row.n == 3);
    CHECK(row.vertices == 12);
    CHECK(row.edges == 17);
    REQUIRE(row.exact.has_value());
    CHECK(*row.exact == 3);
    CHECK(row.exact_status == ExactStatus::proved_optimal);
    REQUIRE(row.formula_exact.has_value());
    CHECK(*row.formula_exact == 3);
    CHECK_FALSE(row.formula_lb.has_value());
    CHECK_FALSE(row.conjecture.has_value());
    CHECK(row.construction_valid);
    CHECK(row.construction_achieved <= *row.exact);
    CHECK(row.status == RowStatus::match);
}

TEST_CASE("solve_instance on a bound-only column count") {
    BoundReport row = solve_instance(3, 6, {});
    CHECK_FALSE(row.formula_exact.has_value());
    REQUIRE(row.formula_lb.has_value());
    REQUIRE(row.conjecture.has_value());
    CHECK(*row.formula_lb == 5);
    CHECK(*row.conjecture == 5);
    CHECK(row.status != RowStatus::unknown);
}

TEST_CASE("zero budget rows are marked unknown, not failed") {
    BoundReport row = solve_instance(6, 10, std::chrono::duration<double>(0.0));
    CHECK(row.exact_status == ExactStatus::budget_lower_bound);
    CHECK(row.status == RowStatus::unknown);
    REQUIRE(row.exact.has_value());  // still a certified lower bound
}

TEST_CASE("sweep produces one row per instance in m-major order") {
    SweepConfig config{.m_lo = 3, .m_hi = 4, .n_lo = 2, .n_hi = 4, .workers = 1};
    auto rows = run_sweep(config);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].m == 3);
    CHECK(rows[0].n == 2);
    CHECK(rows[2].n == 4);
    CHECK(rows[3].m == 4);
    for (const BoundReport& row : rows) {
        CHECK(row.status == RowStatus::match);
        CHECK(row.construction_valid);
        CHECK(row.construction_achieved <= *row.exact);
        if (row.n <= 5) CHECK(*row.exact == *row.formula_exact);
    }
}

TEST_CASE("sweep rejects bad configs") {
    CHECK_THROWS_AS(run_sweep({.m_lo = 4, .m_hi = 3}), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep({.m_lo = 2, .m_hi = 3}), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep({.m_lo = 3, .m_hi = 3, .n_lo = 0, .n_hi = 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(
                        {.m_lo = 3, .m_hi = 3, .n_lo = 1, .n_hi = 1,
                         .budget = std::chrono::duration<double>(0.0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_sweep({.m_lo = 3, .m_hi = 3, .n_lo = 1, .n_hi = 1, .workers = 0}),
                    std::invalid_argument);
}

TEST_CASE("worker count does not change the CSV") {
    SweepConfig solo{.m_lo = 3, .m_hi = 4, .n_lo = 2, .n_hi = 5, .workers = 1};
    SweepConfig pooled = solo;
    pooled.workers = 4;
    CHECK(stable_rows(run_sweep(solo)) == stable_rows(run_sweep(pooled)));
}

TEST_CASE("csv schema") {
    auto rows = run_sweep({.m_lo = 3, .m_hi = 3, .n_lo = 2, .n_hi = 2});
    std::ostringstream out;
    write_csv(rows, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "m,n,vertices,edges,exact,exact_status,formula_exact,formula_lb,conjecture,"
          "construction_achieved,construction_scheme,construction_valid,status,elapsed_ms");
    std::string row;
    std::getline(in, row);
    CHECK(row.find("3,2,6,7,2,proved_optimal,2,,,2,cross_1_2,true,match,") == 0);
}

TEST_CASE("theorem suite passes at desk scale") {
    std::ostringstream log;
    SuiteResult result = verify_theorems(4, 4, {}, log);
    CHECK(result.passed());
    CHECK(result.unknown == 0);
    // paths 19 + cycles 18 + stars 11 + grids 10 + books 2*4
    CHECK(result.checks == 19 + 18 + 11 + 10 + 8);
    CHECK(log.str().find("MISMATCH") == std::string::npos);
}

TEST_CASE("lemma suite passes for the smallest book") {
    std::ostringstream log;
    SuiteResult result = verify_lemmas(3, {}, log);
    CHECK(result.passed());
    CHECK(result.checks == 3);
}

TEST_CASE("conjecture suite reports and never fails") {
    std::ostringstream log;
    SuiteResult result = verify_conjectures(3, 6, {}, log);
    CHECK(result.passed());
    CHECK(result.checks == 1);
    CHECK(log.str().find("report   book:3x6") != std::string::npos);
    CHECK(log.str().find("status=") != std::string::npos);
}

TEST_CASE("witness serialization") {
    auto [g, lab] = stacked_book(3, 2);
    Matching m{{*g.edge_id(lab.id(1, 2), lab.id(2, 2))}, Provenance::construction};
    std::ostringstream out;
    write_witness(g, m, "cross_1_2", out);
    std::string text = out.str();
    CHECK(text.find("graph 6") == 0);
    CHECK(text.find("# scheme cross_1_2") != std::string::npos);
    CHECK(text.find("w 1 4") != std::string::npos);
}
