#include "mim/matching.hpp"

#include <array>
#include <stdexcept>

namespace mim {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::brute_force: return "brute_force";
        case Provenance::branch_and_bound: return "branch_and_bound";
        case Provenance::greedy: return "greedy";
        case Provenance::construction: return "construction";
    }
    return "?";
}

std::string Violation::describe(const Graph& g) const {
    auto [a1, a2] = g.edge(edge_a);
    auto [b1, b2] = g.edge(edge_b);
    std::string text = "edges " + std::to_string(edge_a) + "=(" + std::to_string(a1) + "," +
                       std::to_string(a2) + ") and " + std::to_string(edge_b) + "=(" +
                       std::to_string(b1) + "," + std::to_string(b2) + ") ";
    if (via_edge) {
        auto [c1, c2] = g.edge(*via_edge);
        text += "are joined by edge " + std::to_string(*via_edge) + "=(" + std::to_string(c1) +
                "," + std::to_string(c2) + ")";
    } else {
        text += "share an endpoint";
    }
    return text;
}

InducedCheck is_induced_matching(const Graph& g, std::span<const EdgeId> edge_ids) {
    for (EdgeId id : edge_ids) g.require_edge(id);
    for (std::size_t i = 0; i < edge_ids.size(); ++i) {
        auto [a1, a2] = g.edge(edge_ids[i]);
        for (std::size_t j = i + 1; j < edge_ids.size(); ++j) {
            if (edge_ids[i] == edge_ids[j]) continue;
            auto [b1, b2] = g.edge(edge_ids[j]);
            if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2)
                return {false, Violation{edge_ids[i], edge_ids[j], std::nullopt}};
            for (VertexId x : {a1, a2})
                for (VertexId y : {b1, b2})
                    if (auto bridge = g.edge_id(x, y))
                        return {false, Violation{edge_ids[i], edge_ids[j], bridge}};
        }
    }
    return {true, std::nullopt};
}

std::vector<bool> saturation(const Graph& g, const Matching& m) {
    std::vector<bool> sat(g.vertex_count(), false);
    for (EdgeId id : m.edge_ids) {
        auto [u, v] = g.edge(id);
        sat[u] = sat[v] = true;
    }
    return sat;
}

void certify(const Graph& g, const Matching& m, const std::string& producer) {
    auto check = is_induced_matching(g, m.edge_ids);
    if (!check)
        throw std::logic_error(producer + " produced an invalid matching: " +
                               check.violation->describe(g));
}

ConflictGraph::ConflictGraph(const Graph& g)
    : source_(&g), order_(g.edge_count()), adj_(order_, Bitset(order_)), degree_(order_, 0) {
    for (EdgeId e = 0; e < order_; ++e) {
        auto [a1, a2] = g.edge(e);
        for (EdgeId f = e + 1; f < order_; ++f) {
            auto [b1, b2] = g.edge(f);
            bool clash = a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
            if (!clash) {
                clash = g.adjacent(a1, b1) || g.adjacent(a1, b2) || g.adjacent(a2, b1) ||
                        g.adjacent(a2, b2);
            }
            if (clash) {
                adj_[e].set(f);
                adj_[f].set(e);
            }
        }
    }
    for (EdgeId e = 0; e < order_; ++e) degree_[e] = adj_[e].count();
}

}  // namespace mim
