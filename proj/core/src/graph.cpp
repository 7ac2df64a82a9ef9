#include "lvg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace lvg {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("vertex id out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back(e);
        g.adj_[static_cast<size_t>(e.u)].push_back({e.v, id});
        g.adj_[static_cast<size_t>(e.v)].push_back({e.u, id});
    }
    // parallel-edge check by stamping, one pass over adjacencies
    std::vector<int> stamp(static_cast<size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        for (const Incidence& inc : g.adj_[static_cast<size_t>(v)]) {
            if (stamp[static_cast<size_t>(inc.to)] == v) throw std::invalid_argument("parallel edge");
            stamp[static_cast<size_t>(inc.to)] = v;
        }
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    for (const Incidence& inc : adj_[static_cast<size_t>(u)])
        if (inc.to == v) return true;
    return false;
}

Graph Graph::without_edges(const std::vector<bool>& deleted) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (size_t e = 0; e < edges_.size(); ++e)
        if (!deleted[e]) kept.push_back(edges_[e]);
    return from_edges(n_, kept);
}

Graph Graph::without_edge(int e) const {
    std::vector<bool> deleted(edges_.size(), false);
    deleted[static_cast<size_t>(e)] = true;
    return without_edges(deleted);
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> data_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t start = raw.find_first_not_of(" \t");
        if (start == std::string::npos || raw[start] == '#') continue;
        out.push_back({number, raw});
    }
    return out;
}

std::vector<long long> parse_ints(const Line& line, size_t expect) {
    std::vector<long long> vals;
    std::istringstream in(line.text);
    long long x;
    while (in >> x) vals.push_back(x);
    if (!in.eof()) throw ParseError(line.number, "malformed token");
    if (vals.size() != expect)
        throw ParseError(line.number, "expected " + std::to_string(expect) + " integers");
    return vals;
}

}  // namespace

WeightedGraph parse_weighted(const std::string& text, bool normalize) {
    auto lines = data_lines(text);
    if (lines.empty()) throw ParseError(0, "empty input");

    auto header = parse_ints(lines[0], 3);
    long long n = header[0], m = header[1], k = header[2];
    if (n < 1) throw ParseError(lines[0].number, "vertex count must be positive");
    if (m < 0 || k < 0) throw ParseError(lines[0].number, "negative count");
    if (k == 0 && m != 0) throw ParseError(lines[0].number, "k may be 0 only for edgeless graphs");
    if (static_cast<long long>(lines.size()) != 1 + m)
        throw ParseError(lines[0].number,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::vector<int> weight;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (long long i = 0; i < m; ++i) {
        const Line& line = lines[static_cast<size_t>(i) + 1];
        auto vals = parse_ints(line, 3);
        long long u = vals[0], v = vals[1], w = vals[2];
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line.number, "vertex id out of range");
        if (u == v) throw ParseError(line.number, "self-loop");
        if (w < 1 || w > k) throw ParseError(line.number, "weight out of range");
        Vertex a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
        std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
        if (!seen.insert(key).second) throw ParseError(line.number, "duplicate edge");
        edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
        weight.push_back(static_cast<int>(w));
    }

    std::vector<char> used(static_cast<size_t>(k) + 1, 0);
    for (int w : weight) used[static_cast<size_t>(w)] = 1;
    int distinct = 0;
    for (long long w = 1; w <= k; ++w) distinct += used[static_cast<size_t>(w)];
    if (distinct != k) {
        if (!normalize)
            throw ParseError(lines[0].number,
                             "weights are not surjective onto {1.." + std::to_string(k) + "}");
        std::vector<int> remap(static_cast<size_t>(k) + 1, 0);
        int next = 0;
        for (long long w = 1; w <= k; ++w)
            if (used[static_cast<size_t>(w)]) remap[static_cast<size_t>(w)] = ++next;
        for (int& w : weight) w = remap[static_cast<size_t>(w)];
        k = next;
    }

    WeightedGraph wg;
    wg.graph = Graph::from_edges(static_cast<int>(n), edges);
    wg.weight = std::move(weight);
    wg.k = static_cast<int>(k);
    return wg;
}

std::string emit_weighted(const WeightedGraph& wg) {
    std::ostringstream out;
    out << wg.graph.vertex_count() << ' ' << wg.graph.edge_count() << ' ' << wg.k << '\n';
    for (int e = 0; e < wg.graph.edge_count(); ++e) {
        const Edge& edge = wg.graph.edge(e);
        out << edge.u + 1 << ' ' << edge.v + 1 << ' ' << wg.weight[static_cast<size_t>(e)] << '\n';
    }
    return out.str();
}

Graph level_graph(const WeightedGraph& wg, int i) {
    if (i < 1 || i > wg.k + 1) throw std::invalid_argument("level index out of range");
    std::vector<Edge> kept;
    for (int e = 0; e < wg.graph.edge_count(); ++e)
        if (wg.weight[static_cast<size_t>(e)] >= i) kept.push_back(wg.graph.edge(e));
    return Graph::from_edges(wg.graph.vertex_count(), kept);
}

}  // namespace lvg
