#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mim/constructions.hpp"
#include "mim/families.hpp"
#include "mim/solver.hpp"

using namespace mim;

TEST_CASE("two-column cross construction") {
    CHECK(construct_n2(3).achieved_size == 2);
    CHECK(construct_n2(6).achieved_size == 5);
    ConstructionResult r = construct_n2(4);
    CHECK(r.achieved_size == 3);
    CHECK(r.claimed_size == 3);
    CHECK(is_induced_matching(stacked_book(4, 2).graph, r.matching.edge_ids).ok);
    CHECK(r.matching.provenance == Provenance::construction);
    CHECK_THROWS_AS(construct_n2(2), std::invalid_argument);
}

TEST_CASE("three-column construction touches no centers") {
    for (int m : {3, 4, 5}) {
        ConstructionResult r = construct_n3(m);
        CHECK(r.achieved_size == m - 1);
        auto [g, lab] = stacked_book(m, 3);
        Matching matching{r.matching.edge_ids, Provenance::construction};
        auto sat = saturation(g, matching);
        for (int col = 1; col <= 3; ++col) CHECK_FALSE(sat[lab.center(col)]);
    }
}

TEST_CASE("four-column construction reaches m") {
    for (int m : {3, 5, 9}) {
        ConstructionResult r = construct_n4(m);
        CHECK(r.achieved_size == m);
        CHECK(r.claimed_size == m);
    }
    // dropping the far star edge loses exactly one
    ConstructionResult r = construct_n4(4);
    CHECK(r.achieved_size == 4);
}

TEST_CASE("five-column construction doubles the cross blocks") {
    CHECK(construct_n5(3).achieved_size == 4);
    CHECK(construct_n5(6).achieved_size == 10);
    // restricted to one leaf row, the witness is the two outer cross edges
    auto [g, lab] = stacked_book(4, 5);
    ConstructionResult r = construct_n5(4);
    for (int j = 2; j <= 4; ++j) {
        int row_edges = 0;
        for (EdgeId id : r.matching.edge_ids) {
            auto [u, v] = g.edge(id);
            auto [cu, pu] = lab.coords(u);
            auto [cv, pv] = lab.coords(v);
            if (pu == j && pv == j) {
                ++row_edges;
                bool outer = (cu == 1 && cv == 2) || (cu == 4 && cv == 5);
                CHECK(outer);
            }
        }
        CHECK(row_edges == 2);
    }
}

TEST_CASE("per-n constructions hit the advertised sizes across m") {
    for (int m = 3; m <= 12; ++m) {
        CHECK(construct_n2(m).achieved_size == m - 1);
        CHECK(construct_n3(m).achieved_size == m - 1);
        CHECK(construct_n4(m).achieved_size == m);
        CHECK(construct_n5(m).achieved_size == 2 * (m - 1));
    }
}

TEST_CASE("constructions never beat the solver") {
    for (int m : {3, 4}) {
        for (int n = 2; n <= 5; ++n) {
            ConstructionResult r = construct_for(m, n);
            int exact = im_exact(stacked_book(m, n).graph).matching.size();
            CHECK(r.achieved_size <= exact);
        }
    }
}

TEST_CASE("general construction returns a certified witness and reports the gap") {
    for (int m = 3; m <= 5; ++m) {
        for (int n = 6; n <= 9; ++n) {
            ConstructionResult r = construct_general(m, n);
            Graph g = stacked_book(m, n).graph;
            CHECK(is_induced_matching(g, r.matching.edge_ids).ok);
            CHECK(r.achieved_size == r.matching.size());
            CHECK(r.claimed_size > 0);
            CHECK(!r.scheme.empty());
        }
    }
    CHECK_THROWS_AS(construct_general(3, 5), std::invalid_argument);
}

TEST_CASE("period-4 tiling sizes") {
    // blocks at columns 1 and 5: 2(m-1) edges before augmentation
    ConstructionResult r36 = construct_general(3, 6);
    CHECK(r36.claimed_size == 5);
    CHECK(r36.achieved_size >= 4);
    ConstructionResult r48 = construct_general(4, 8);
    CHECK(r48.claimed_size == 8);
    CHECK(r48.achieved_size >= 6);
}

TEST_CASE("construct_for dispatches across the column range") {
    CHECK(construct_for(4, 1).achieved_size == 1);
    CHECK(construct_for(4, 1).scheme == "star_edge");
    CHECK(construct_for(4, 2).scheme == "cross_1_2");
    CHECK(construct_for(4, 5).scheme == "double_cross");
    CHECK(construct_for(3, 6).achieved_size >= 4);
    CHECK_THROWS_AS(construct_for(2, 3), std::invalid_argument);
}
