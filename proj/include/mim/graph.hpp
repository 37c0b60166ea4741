#ifndef MIM_GRAPH_HPP
#define MIM_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mim {

using VertexId = int;
using EdgeId = int;

// Canonical form keeps first < second.
using Edge = std::pair<VertexId, VertexId>;

// Shortest-path length, or an explicit unreachable marker for vertices in
// different components.
class Distance {
public:
    static Distance finite(int hops) { return Distance(hops); }
    static Distance unreachable() { return Distance(); }

    bool is_unreachable() const { return hops_ < 0; }
    int value() const {
        if (is_unreachable()) throw std::logic_error("Distance: unreachable has no value");
        return hops_;
    }

    friend bool operator==(const Distance&, const Distance&) = default;

private:
    Distance() = default;
    explicit Distance(int hops) : hops_(hops) {}
    int hops_ = -1;
};

// Immutable simple undirected graph. Edges are deduplicated and stored
// sorted by (min endpoint, max endpoint); an edge id is the position in
// that list, so the same edge set always yields the same ids.
class Graph {
public:
    Graph(int vertex_count, const std::vector<Edge>& edge_pairs);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    Edge edge(EdgeId id) const;
    std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }

    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    void require_vertex(VertexId v) const;
    void require_edge(EdgeId id) const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

// Vertex (a, b) of the product gets id a * h.vertex_count() + b; the pair
// is adjacent to (a', b') iff a == a' and b ~ b' in h, or b == b' and
// a ~ a' in g.
Graph cartesian_product(const Graph& g, const Graph& h);

Distance distance(const Graph& g, VertexId source, VertexId target);
Distance diameter(const Graph& g);

// Edge-list text format: `graph <vertex_count>` on the first line, then
// `e <u> <v>` per edge; `#` starts a comment line.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what);
    int line;
};

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace mim

#endif
