#include "mim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace mim {

Graph::Graph(int vertex_count, const std::vector<Edge>& edge_pairs)
    : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("graph: negative vertex count");
    edges_.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs) {
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("graph: endpoint out of range in edge (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.resize(vertex_count);
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Edge Graph::edge(EdgeId id) const {
    require_edge(id);
    return edges_[id];
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    require_vertex(v);
    return adjacency_[v];
}

void Graph::require_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count_)
        throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(vertex_count_) + ")");
}

void Graph::require_edge(EdgeId id) const {
    if (id < 0 || id >= edge_count())
        throw std::out_of_range("graph: edge id " + std::to_string(id) + " out of range [0, " +
                                std::to_string(edge_count()) + ")");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("cartesian_product: empty factor");
    const int nh = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.vertex_count()) * h.edge_count() +
                  static_cast<std::size_t>(h.vertex_count()) * g.edge_count());
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (auto [b1, b2] : h.edges()) edges.emplace_back(a * nh + b1, a * nh + b2);
    for (auto [a1, a2] : g.edges())
        for (VertexId b = 0; b < h.vertex_count(); ++b) edges.emplace_back(a1 * nh + b, a2 * nh + b);
    return Graph(g.vertex_count() * nh, edges);
}

namespace {

// Single-source BFS over the whole graph; -1 marks unreached vertices.
std::vector<int> bfs_levels(const Graph& g, VertexId source) {
    std::vector<int> level(g.vertex_count(), -1);
    std::queue<VertexId> frontier;
    level[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        VertexId v = frontier.front();
        frontier.pop();
        for (VertexId w : g.neighbors(v)) {
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                frontier.push(w);
            }
        }
    }
    return level;
}

}  // namespace

Distance distance(const Graph& g, VertexId source, VertexId target) {
    g.require_vertex(source);
    g.require_vertex(target);
    if (source == target) return Distance::finite(0);
    auto level = bfs_levels(g, source);
    if (level[target] < 0) return Distance::unreachable();
    return Distance::finite(level[target]);
}

Distance diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("diameter: empty graph");
    int best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto level = bfs_levels(g, v);
        for (int l : level) {
            if (l < 0) return Distance::unreachable();
            best = std::max(best, l);
        }
    }
    return Distance::finite(best);
}

ParseError::ParseError(int line_no, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    int vertex_count = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line
        if (head[0] == '#') continue;
        if (head == "graph") {
            if (vertex_count >= 0) throw ParseError(line_no, "duplicate graph header");
            if (!(ls >> vertex_count) || vertex_count < 0)
                throw ParseError(line_no, "expected `graph <vertex_count>`");
        } else if (head == "e") {
            if (vertex_count < 0) throw ParseError(line_no, "edge before graph header");
            VertexId u, v;
            if (!(ls >> u >> v)) throw ParseError(line_no, "expected `e <u> <v>`");
            if (u == v) throw ParseError(line_no, "self-loop");
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw ParseError(line_no, "endpoint out of range");
            edges.emplace_back(u, v);
        } else {
            throw ParseError(line_no, "unrecognized line `" + head + "`");
        }
    }
    if (vertex_count < 0) throw ParseError(line_no, "missing graph header");
    return Graph(vertex_count, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "graph " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(g, out);
}

}  // namespace mim
