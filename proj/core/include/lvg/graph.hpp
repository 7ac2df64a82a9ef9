#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvg {

using Vertex = int;

struct Edge {
    Vertex u = -1;
    Vertex v = -1;

    bool operator==(const Edge&) const = default;
};

struct Incidence {
    Vertex to = -1;
    int edge = -1;
};

/// Simple undirected graph. Vertices are 0..n-1, edges are indexed by
/// insertion order and adjacency lists carry (neighbor, edge id) pairs.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {}

    // Throws std::invalid_argument on self-loops, parallel edges or bad ids.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    std::span<const Incidence> neighbors(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(Vertex u, Vertex v) const;

    // Spanning subgraph with the given edges removed (deleted[e] == true).
    Graph without_edges(const std::vector<bool>& deleted) const;
    Graph without_edge(int e) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
};

/// Graph plus a surjective edge weight map onto {1..k}. k == 0 iff edgeless.
struct WeightedGraph {
    Graph graph;
    std::vector<int> weight;  // per edge id, values in 1..k
    int k = 0;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Text format: header "n m k", then m lines "u v w" with 1-based vertex ids.
// '#' starts a comment line. With normalize set, weights are densely remapped
// (order-preserving) instead of being rejected for non-surjectivity.
WeightedGraph parse_weighted(const std::string& text, bool normalize = false);
std::string emit_weighted(const WeightedGraph& wg);

// Spanning subgraph keeping exactly the edges of weight >= i, for 1 <= i <= k+1.
Graph level_graph(const WeightedGraph& wg, int i);

}  // namespace lvg
