#include "mim/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "mim/families.hpp"
#include "mim/formulas.hpp"
#include "mim/solver.hpp"

namespace mim {

namespace {

void require_m(int m) {
    if (m < 3) throw std::invalid_argument("construction: need m >= 3");
}

EdgeId edge_between(const Graph& g, VertexId u, VertexId v) {
    auto id = g.edge_id(u, v);
    if (!id) throw std::logic_error("construction: expected edge missing");
    return *id;
}

// Cross edges (col, j)-(col+1, j) for every leaf position j.
std::vector<EdgeId> cross_block(const Graph& g, const BookLabeling& lab, int col) {
    std::vector<EdgeId> ids;
    for (int j = 2; j <= lab.m(); ++j)
        ids.push_back(edge_between(g, lab.id(col, j), lab.id(col + 1, j)));
    return ids;
}

EdgeId star_edge(const Graph& g, const BookLabeling& lab, int col) {
    return edge_between(g, lab.center(col), lab.id(col, 2));  // leaf 2, for determinism
}

ConstructionResult finish(const Graph& g, std::vector<EdgeId> ids, int claimed,
                          std::string scheme) {
    std::sort(ids.begin(), ids.end());
    Matching m{std::move(ids), Provenance::construction};
    certify(g, m, "construction " + scheme);
    int achieved = m.size();
    return {std::move(m), claimed, achieved, std::move(scheme)};
}

}  // namespace

ConstructionResult construct_n2(int m) {
    require_m(m);
    auto [g, lab] = stacked_book(m, 2);
    return finish(g, cross_block(g, lab, 1), m - 1, "cross_1_2");
}

ConstructionResult construct_n3(int m) {
    require_m(m);
    auto [g, lab] = stacked_book(m, 3);
    return finish(g, cross_block(g, lab, 2), m - 1, "cross_2_3");
}

ConstructionResult construct_n4(int m) {
    require_m(m);
    auto [g, lab] = stacked_book(m, 4);
    auto ids = cross_block(g, lab, 1);
    ids.push_back(star_edge(g, lab, 4));
    return finish(g, std::move(ids), m, "cross_1_2_plus_star_4");
}

ConstructionResult construct_n5(int m) {
    require_m(m);
    auto [g, lab] = stacked_book(m, 5);
    auto ids = cross_block(g, lab, 1);
    auto tail = cross_block(g, lab, 4);
    ids.insert(ids.end(), tail.begin(), tail.end());
    return finish(g, std::move(ids), 2 * (m - 1), "double_cross");
}

ConstructionResult construct_general(int m, int n) {
    require_m(m);
    if (n < 6) throw std::invalid_argument("construct_general: need n >= 6");
    auto [g, lab] = stacked_book(m, n);
    FormulaValue bound = im_book_lower_bound(m, n);
    int claimed = bound.applicable ? bound.value : 0;

    // (a) cross blocks at columns 1, 5, 9, ... with two spacer columns
    std::vector<EdgeId> tiling;
    for (int col = 1; col + 1 <= n; col += 4) {
        auto block = cross_block(g, lab, col);
        tiling.insert(tiling.end(), block.begin(), block.end());
    }
    ConstructionResult period4 = finish(g, tiling, claimed, "period4");

    // (b) augment with star edges wherever the checker still admits them,
    // scanning from the far end
    std::vector<EdgeId> augmented = tiling;
    for (int col = n; col >= 1; --col) {
        augmented.push_back(star_edge(g, lab, col));
        if (!is_induced_matching(g, augmented).ok) augmented.pop_back();
    }
    ConstructionResult with_stars = finish(g, std::move(augmented), claimed, "period4_stars");

    // (c) plain greedy on the whole graph
    Matching greedy = greedy_lower_bound(g);
    ConstructionResult greedy_result =
        finish(g, greedy.edge_ids, claimed, "greedy");

    ConstructionResult* best = &period4;
    if (with_stars.achieved_size > best->achieved_size) best = &with_stars;
    if (greedy_result.achieved_size > best->achieved_size) best = &greedy_result;
    return std::move(*best);
}

ConstructionResult construct_for(int m, int n) {
    require_m(m);
    if (n < 1) throw std::invalid_argument("construct_for: need n >= 1");
    if (n == 1) {
        auto [g, lab] = stacked_book(m, 1);
        return finish(g, {star_edge(g, lab, 1)}, 1, "star_edge");
    }
    switch (n) {
        case 2: return construct_n2(m);
        case 3: return construct_n3(m);
        case 4: return construct_n4(m);
        case 5: return construct_n5(m);
        default: return construct_general(m, n);
    }
}

}  // namespace mim
