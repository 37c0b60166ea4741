#ifndef MIM_MATCHING_HPP
#define MIM_MATCHING_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mim/bitset.hpp"
#include "mim/graph.hpp"

namespace mim {

enum class Provenance { brute_force, branch_and_bound, greedy, construction };

const char* to_string(Provenance p);

// A certified induced matching: every producer in this library runs the
// validity checker before handing one out.
struct Matching {
    std::vector<EdgeId> edge_ids;  // sorted ascending
    Provenance provenance = Provenance::construction;

    int size() const { return static_cast<int>(edge_ids.size()); }
};

// One offending pair; via_edge is the bridging edge when the two members
// do not share an endpoint.
struct Violation {
    EdgeId edge_a = -1;
    EdgeId edge_b = -1;
    std::optional<EdgeId> via_edge;

    std::string describe(const Graph& g) const;
};

struct InducedCheck {
    bool ok = true;
    std::optional<Violation> violation;

    explicit operator bool() const { return ok; }
};

// True iff the edges are pairwise vertex-disjoint and no edge of g joins
// endpoints of two distinct members.
InducedCheck is_induced_matching(const Graph& g, std::span<const EdgeId> edge_ids);

// Per-vertex flag: endpoint of some matching edge.
std::vector<bool> saturation(const Graph& g, const Matching& m);

// Throws std::logic_error when a supposedly certified matching fails the
// checker; producers call this before returning.
void certify(const Graph& g, const Matching& m, const std::string& producer);

// Graph on edge ids of the source graph; two edges are adjacent iff they
// can never coexist in an induced matching (shared endpoint, or some
// source edge joins an endpoint of one to an endpoint of the other).
// Induced matchings of the source correspond exactly to independent sets
// here. Holds a reference to the source graph; the source must outlive it.
class ConflictGraph {
public:
    explicit ConflictGraph(const Graph& g);

    int order() const { return order_; }
    const Graph& source() const { return *source_; }

    bool conflict(EdgeId e, EdgeId f) const { return adj_[e].test(f); }
    const Bitset& neighbors(EdgeId e) const { return adj_[e]; }
    int degree(EdgeId e) const { return degree_[e]; }

private:
    const Graph* source_;
    int order_;
    std::vector<Bitset> adj_;
    std::vector<int> degree_;
};

}  // namespace mim

#endif
