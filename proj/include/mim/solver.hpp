#ifndef MIM_SOLVER_HPP
#define MIM_SOLVER_HPP

#include <chrono>
#include <optional>
#include <span>

#include "mim/matching.hpp"

namespace mim {

// Exhaustive search refuses past this many edges.
inline constexpr int kBruteForceEdgeCap = 24;

using Budget = std::optional<std::chrono::duration<double>>;

struct SolveResult {
    Matching matching;
    // False only when the time budget ran out; the matching is still a
    // certified lower-bound witness.
    bool optimal = true;
};

// Exhaustive independent-set enumeration over the conflict graph. Returns
// the lexicographically smallest maximum witness. Throws when the edge
// count exceeds kBruteForceEdgeCap.
Matching im_bruteforce(const Graph& g);

// Branch and bound over the conflict graph: greedy initial incumbent,
// branching on a maximum-conflict-degree node (take before leave, ties to
// the lowest id), pruning when the remaining candidates cannot beat the
// incumbent.
SolveResult im_exact(const Graph& g, Budget budget = {});

// Maximum induced matching containing every edge in `required`: the
// required nodes are fixed, their conflict neighborhoods deleted, and the
// remainder solved. Throws when `required` is not itself an induced
// matching.
SolveResult im_exact_forced(const Graph& g, std::span<const EdgeId> required, Budget budget = {});

struct EnumerateResult {
    std::vector<Matching> matchings;  // lexicographic order by edge-id set
    bool truncated = false;
    long long total = 0;  // maxima seen, including any past the cap
};

// All maximum induced matchings. Requires edge count <= kBruteForceEdgeCap
// unless a cap on the number of stored witnesses is supplied.
EnumerateResult enumerate_mims(const Graph& g, std::optional<int> cap = {});

// Repeatedly picks the minimum-conflict-degree remaining edge (ties to the
// lowest id) and removes its closed conflict neighborhood.
Matching greedy_lower_bound(const Graph& g);

}  // namespace mim

#endif
