#include "mim/solver.hpp"

#include <limits>
#include <stdexcept>

namespace mim {

namespace {

Matching to_matching(const Bitset& nodes, Provenance prov) {
    return Matching{nodes.to_vector(), prov};
}

// Greedy independent set restricted to `remaining`; degrees are counted
// within the shrinking subgraph.
Bitset greedy_on(const ConflictGraph& cg, Bitset remaining) {
    Bitset picked(cg.order());
    while (true) {
        int choice = -1;
        int choice_deg = std::numeric_limits<int>::max();
        for (int u = remaining.find_first(); u >= 0; u = remaining.find_next(u)) {
            int d = cg.neighbors(u).intersection_count(remaining);
            if (d < choice_deg) {
                choice_deg = d;
                choice = u;
            }
        }
        if (choice < 0) break;
        picked.set(choice);
        remaining.subtract(cg.neighbors(choice));
        remaining.reset(choice);
    }
    return picked;
}

// Greedy clique cover of `cand`; the number of cliques is an upper bound
// on any independent set inside `cand`.
int clique_cover_bound(const ConflictGraph& cg, Bitset cand) {
    int cliques = 0;
    while (true) {
        int seed = cand.find_first();
        if (seed < 0) break;
        Bitset clique(cg.order());
        clique.set(seed);
        int clique_size = 1;
        cand.reset(seed);
        for (int u = cand.find_first(); u >= 0; u = cand.find_next(u)) {
            if (cg.neighbors(u).intersection_count(clique) == clique_size) {
                clique.set(u);
                ++clique_size;
                cand.reset(u);
            }
        }
        ++cliques;
    }
    return cliques;
}

class BranchAndBound {
public:
    BranchAndBound(const ConflictGraph& cg, Budget budget) : cg_(cg), best_(cg.order()) {
        if (budget) deadline_ = std::chrono::steady_clock::now() +
                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(*budget);
    }

    // `chosen` must already be conflict-free and disjoint from N[cand].
    SolveResult run(Bitset cand, Bitset chosen) {
        Bitset seed = chosen;
        seed |= greedy_on(cg_, cand);
        best_ = seed;
        best_size_ = seed.count();
        int chosen_size = chosen.count();
        explore(std::move(cand), chosen, chosen_size);
        return {to_matching(best_, Provenance::branch_and_bound), !out_of_budget_};
    }

private:
    void explore(Bitset cand, const Bitset& chosen, int chosen_size) {
        if (out_of_budget_ || hit_deadline()) return;
        int cand_count = cand.count();
        if (chosen_size + cand_count <= best_size_) return;
        if (cand_count == 0) {
            best_ = chosen;
            best_size_ = chosen_size;
            return;
        }
        if (chosen_size + clique_cover_bound(cg_, cand) <= best_size_) return;

        // max conflict degree within cand, ties to the lowest id
        int v = -1;
        int v_deg = -1;
        for (int u = cand.find_first(); u >= 0; u = cand.find_next(u)) {
            int d = cg_.neighbors(u).intersection_count(cand);
            if (d > v_deg) {
                v_deg = d;
                v = u;
            }
        }

        Bitset take = cand;
        take.subtract(cg_.neighbors(v));
        take.reset(v);
        Bitset with_v = chosen;
        with_v.set(v);
        explore(std::move(take), with_v, chosen_size + 1);

        cand.reset(v);
        explore(std::move(cand), chosen, chosen_size);
    }

    bool hit_deadline() {
        if (!deadline_) return false;
        if ((++ticks_ & 15) != 0) return false;
        if (std::chrono::steady_clock::now() >= *deadline_) out_of_budget_ = true;
        return out_of_budget_;
    }

    const ConflictGraph& cg_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    Bitset best_;
    int best_size_ = 0;
    bool out_of_budget_ = false;
    unsigned ticks_ = 0;
};

}  // namespace

Matching im_bruteforce(const Graph& g) {
    if (g.edge_count() > kBruteForceEdgeCap)
        throw std::invalid_argument("im_bruteforce: " + std::to_string(g.edge_count()) +
                                    " edges exceeds the cap of " +
                                    std::to_string(kBruteForceEdgeCap) +
                                    "; use the branch-and-bound solver");
    ConflictGraph cg(g);
    Bitset best(cg.order());
    int best_size = 0;

    // Lowest-id branching, include before exclude: independent sets are
    // visited in lexicographic order, so the first maximum found is the
    // lexicographically smallest. The empty set is the initial incumbent.
    auto dfs = [&](auto&& self, Bitset cand, const Bitset& chosen, int chosen_size) -> void {
        if (chosen_size + cand.count() <= best_size) return;
        int v = cand.find_first();
        if (v < 0) {
            best = chosen;
            best_size = chosen_size;
            return;
        }
        Bitset take = cand;
        take.subtract(cg.neighbors(v));
        take.reset(v);
        Bitset with_v = chosen;
        with_v.set(v);
        self(self, std::move(take), with_v, chosen_size + 1);
        cand.reset(v);
        self(self, std::move(cand), chosen, chosen_size);
    };
    Bitset all(cg.order());
    for (int i = 0; i < cg.order(); ++i) all.set(i);
    dfs(dfs, std::move(all), Bitset(cg.order()), 0);

    Matching result = to_matching(best, Provenance::brute_force);
    certify(g, result, "im_bruteforce");
    return result;
}

SolveResult im_exact(const Graph& g, Budget budget) {
    ConflictGraph cg(g);
    Bitset cand(cg.order());
    for (int i = 0; i < cg.order(); ++i) cand.set(i);
    SolveResult result = BranchAndBound(cg, budget).run(std::move(cand), Bitset(cg.order()));
    certify(g, result.matching, "im_exact");
    return result;
}

SolveResult im_exact_forced(const Graph& g, std::span<const EdgeId> required, Budget budget) {
    auto check = is_induced_matching(g, required);
    if (!check)
        throw std::invalid_argument("im_exact_forced: required set is not an induced matching: " +
                                    check.violation->describe(g));
    ConflictGraph cg(g);
    Bitset cand(cg.order());
    for (int i = 0; i < cg.order(); ++i) cand.set(i);
    Bitset chosen(cg.order());
    for (EdgeId r : required) {
        chosen.set(r);
        cand.subtract(cg.neighbors(r));
        cand.reset(r);
    }
    SolveResult result = BranchAndBound(cg, budget).run(std::move(cand), std::move(chosen));
    certify(g, result.matching, "im_exact_forced");
    return result;
}

EnumerateResult enumerate_mims(const Graph& g, std::optional<int> cap) {
    if (!cap && g.edge_count() > kBruteForceEdgeCap)
        throw std::invalid_argument("enumerate_mims: " + std::to_string(g.edge_count()) +
                                    " edges exceeds the cap of " +
                                    std::to_string(kBruteForceEdgeCap) +
                                    "; supply an explicit witness cap");
    ConflictGraph cg(g);
    EnumerateResult out;
    int best_size = 0;
    std::vector<Bitset> found;
    long long count = 0;

    auto dfs = [&](auto&& self, Bitset cand, const Bitset& chosen, int chosen_size) -> void {
        if (chosen_size + cand.count() < best_size) return;
        int v = cand.find_first();
        if (v < 0) {
            if (chosen_size > best_size) {
                best_size = chosen_size;
                found.clear();
                count = 0;
            }
            if (chosen_size == best_size) {
                ++count;
                if (!cap || static_cast<long long>(found.size()) < *cap) found.push_back(chosen);
            }
            return;
        }
        Bitset take = cand;
        take.subtract(cg.neighbors(v));
        take.reset(v);
        Bitset with_v = chosen;
        with_v.set(v);
        self(self, std::move(take), with_v, chosen_size + 1);
        cand.reset(v);
        self(self, std::move(cand), chosen, chosen_size);
    };
    Bitset all(cg.order());
    for (int i = 0; i < cg.order(); ++i) all.set(i);
    dfs(dfs, std::move(all), Bitset(cg.order()), 0);

    out.total = count;
    out.truncated = cap && count > *cap;
    out.matchings.reserve(found.size());
    for (const Bitset& nodes : found) {
        Matching m = to_matching(nodes, Provenance::brute_force);
        certify(g, m, "enumerate_mims");
        out.matchings.push_back(std::move(m));
    }
    return out;
}

Matching greedy_lower_bound(const Graph& g) {
    ConflictGraph cg(g);
    Bitset all(cg.order());
    for (int i = 0; i < cg.order(); ++i) all.set(i);
    Matching result = to_matching(greedy_on(cg, std::move(all)), Provenance::greedy);
    certify(g, result, "greedy_lower_bound");
    return result;
}

}  // namespace mim
