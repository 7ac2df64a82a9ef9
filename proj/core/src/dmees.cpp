#include "lvg/dmees.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

#include "lvg/bucket_order.hpp"

namespace lvg {

namespace {

// Ties among minimum-degree copies are broken toward the earliest-created
// copy within this many leading positions of the minimum block. Keeps the
// pick O(1) while making small-instance output independent of block history.
constexpr int kTieScanWindow = 64;

std::vector<int> sort_edges_by_weight(const WeightedGraph& wg) {
    int m = wg.graph.edge_count();
    std::vector<int> count(static_cast<size_t>(wg.k) + 2, 0);
    for (int e = 0; e < m; ++e) ++count[static_cast<size_t>(wg.weight[static_cast<size_t>(e)])];
    std::vector<int> cursor(static_cast<size_t>(wg.k) + 2, 0);
    for (int w = 1; w <= wg.k; ++w)
        cursor[static_cast<size_t>(w) + 1] = cursor[static_cast<size_t>(w)] + count[static_cast<size_t>(w)];
    std::vector<int> out(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e)
        out[static_cast<size_t>(cursor[static_cast<size_t>(wg.weight[static_cast<size_t>(e)])]++)] = e;
    return out;
}

}  // namespace

Slices slice(const WeightedGraph& wg) {
    int n = wg.graph.vertex_count();
    int m = wg.graph.edge_count();
    Slices s;
    s.level_copies.resize(static_cast<size_t>(wg.k) + 1);  // index by level, slot 0 unused
    s.edge_copies.assign(static_cast<size_t>(m), {-1, -1});
    s.edges_by_weight = sort_edges_by_weight(wg);

    std::vector<int> last_level(static_cast<size_t>(n), 0);
    std::vector<int> last_copy(static_cast<size_t>(n), -1);
    for (int e : s.edges_by_weight) {
        int w = wg.weight[static_cast<size_t>(e)];
        const Edge& edge = wg.graph.edge(e);
        std::array<Vertex, 2> ends = {edge.u, edge.v};
        for (int side = 0; side < 2; ++side) {
            Vertex v = ends[static_cast<size_t>(side)];
            if (last_level[static_cast<size_t>(v)] != w) {
                int id = static_cast<int>(s.copies.size());
                s.copies.push_back({v, w, 0});
                s.copy_edges.emplace_back();
                s.level_copies[static_cast<size_t>(w)].push_back(id);
                last_level[static_cast<size_t>(v)] = w;
                last_copy[static_cast<size_t>(v)] = id;
            }
            int c = last_copy[static_cast<size_t>(v)];
            s.edge_copies[static_cast<size_t>(e)][static_cast<size_t>(side)] = c;
            s.copy_edges[static_cast<size_t>(c)].push_back(e);
        }
    }

    // level degrees by one sweep: start from full degrees, peel a weight
    // class after recording the copies of its level
    std::vector<int> cur(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) cur[static_cast<size_t>(v)] = wg.graph.degree(v);
    size_t at = 0;
    for (int w = 1; w <= wg.k; ++w) {
        for (int c : s.level_copies[static_cast<size_t>(w)])
            s.copies[static_cast<size_t>(c)].level_degree =
                cur[static_cast<size_t>(s.copies[static_cast<size_t>(c)].vertex)];
        while (at < s.edges_by_weight.size() &&
               wg.weight[static_cast<size_t>(s.edges_by_weight[at])] == w) {
            const Edge& edge = wg.graph.edge(s.edges_by_weight[at]);
            --cur[static_cast<size_t>(edge.u)];
            --cur[static_cast<size_t>(edge.v)];
            ++at;
        }
    }

    // one global counting sort of all copies by level degree, stable in
    // creation order, so every slice comes out pre-sorted
    std::vector<int> count(static_cast<size_t>(n) + 1, 0);
    for (const VertexCopy& c : s.copies) ++count[static_cast<size_t>(c.level_degree)];
    std::vector<int> cursor(static_cast<size_t>(n) + 1, 0);
    for (int d = 1; d <= n; ++d)
        cursor[static_cast<size_t>(d)] = cursor[static_cast<size_t>(d) - 1] + count[static_cast<size_t>(d) - 1];
    std::vector<int> by_degree(s.copies.size());
    for (int c = 0; c < static_cast<int>(s.copies.size()); ++c)
        by_degree[static_cast<size_t>(cursor[static_cast<size_t>(s.copies[static_cast<size_t>(c)].level_degree)]++)] = c;
    for (auto& list : s.level_copies) list.clear();
    for (int c : by_degree)
        s.level_copies[static_cast<size_t>(s.copies[static_cast<size_t>(c)].level)].push_back(c);
    return s;
}

CopyOrder order_copies(const WeightedGraph& wg, const Slices& slices, TieBreak tie,
                       std::uint64_t seed) {
    int n = wg.graph.vertex_count();
    CopyOrder out;
    out.sigma.reserve(slices.copies.size());
    out.stars.resize(slices.copies.size());
    std::vector<char> placed(slices.copies.size(), 0);
    std::vector<int> local_of(slices.copies.size(), -1);
    std::mt19937_64 rng(seed);

    for (int level = 1; level <= wg.k; ++level) {
        const std::vector<int>& members = slices.level_copies[static_cast<size_t>(level)];
        if (members.empty()) continue;
        // members arrive degree-sorted from the slicing pass, so the
        // structure builds without re-sorting; copy ids carry creation order
        std::vector<int> keys(members.size());
        for (size_t i = 0; i < members.size(); ++i)
            keys[i] = slices.copies[static_cast<size_t>(members[i])].level_degree;
        BucketOrder bo(keys, 0, std::max(n - 1, 0));
        for (size_t i = 0; i < members.size(); ++i)
            local_of[static_cast<size_t>(members[i])] = static_cast<int>(i);

        while (!bo.empty()) {
            int first = bo.min_block_first();
            int last = bo.min_block_last();
            int pick_pos = first;
            if (tie == TieBreak::Seeded) {
                std::uniform_int_distribution<int> dist(first, last);
                pick_pos = dist(rng);
            } else {
                int window_last = std::min(last, first + kTieScanWindow - 1);
                int best = members[static_cast<size_t>(bo.object_at(first))];
                for (int p = first + 1; p <= window_last; ++p) {
                    int candidate = members[static_cast<size_t>(bo.object_at(p))];
                    if (candidate < best) {
                        best = candidate;
                        pick_pos = p;
                    }
                }
            }
            int local = bo.remove_from_min_block(pick_pos);
            int c = members[static_cast<size_t>(local)];
            placed[static_cast<size_t>(c)] = 1;
            out.sigma.push_back(c);
            for (int e : slices.copy_edges[static_cast<size_t>(c)]) {
                const auto& pair = slices.edge_copies[static_cast<size_t>(e)];
                int other = pair[0] == c ? pair[1] : pair[0];
                if (placed[static_cast<size_t>(other)]) continue;  // claimed by an earlier star
                out.stars[static_cast<size_t>(c)].push_back(e);
                bo.decrease_key(local_of[static_cast<size_t>(other)]);
            }
        }
    }
    return out;
}

EliminationScheme order_edges(const WeightedGraph& wg, const Slices& slices,
                              const CopyOrder& order) {
    int n = wg.graph.vertex_count();
    int m = wg.graph.edge_count();

    // degree of the partner endpoint in the graph formed by this star and
    // all later ones
    std::vector<int> cur(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) cur[static_cast<size_t>(v)] = wg.graph.degree(v);
    std::vector<int> key(static_cast<size_t>(m), 0);
    std::vector<int> owner(static_cast<size_t>(m), -1);
    for (int c : order.sigma) {
        for (int e : order.stars[static_cast<size_t>(c)]) {
            const Edge& edge = wg.graph.edge(e);
            Vertex hub = (slices.edge_copies[static_cast<size_t>(e)][0] == c) ? edge.u : edge.v;
            Vertex partner = edge.u == hub ? edge.v : edge.u;
            key[static_cast<size_t>(e)] = cur[static_cast<size_t>(partner)];
            owner[static_cast<size_t>(e)] = c;
        }
        for (int e : order.stars[static_cast<size_t>(c)]) {
            const Edge& edge = wg.graph.edge(e);
            --cur[static_cast<size_t>(edge.u)];
            --cur[static_cast<size_t>(edge.v)];
        }
    }

    // stable counting sort of all edges by partner degree, then scatter back
    // into stars in sigma order
    std::vector<int> count(static_cast<size_t>(n) + 1, 0);
    for (int c : order.sigma)
        for (int e : order.stars[static_cast<size_t>(c)]) ++count[static_cast<size_t>(key[static_cast<size_t>(e)])];
    std::vector<int> cursor(static_cast<size_t>(n) + 1, 0);
    for (int d = 1; d <= n; ++d)
        cursor[static_cast<size_t>(d)] = cursor[static_cast<size_t>(d) - 1] + count[static_cast<size_t>(d) - 1];
    std::vector<int> sorted(static_cast<size_t>(m), -1);
    for (int c : order.sigma)
        for (int e : order.stars[static_cast<size_t>(c)])
            sorted[static_cast<size_t>(cursor[static_cast<size_t>(key[static_cast<size_t>(e)])]++)] = e;

    std::vector<std::vector<int>> reordered(order.stars.size());
    for (size_t c = 0; c < order.stars.size(); ++c)
        reordered[c].reserve(order.stars[c].size());
    for (int e : sorted)
        if (e >= 0) reordered[static_cast<size_t>(owner[static_cast<size_t>(e)])].push_back(e);

    EliminationScheme scheme;
    scheme.order.reserve(static_cast<size_t>(m));
    for (int c : order.sigma)
        for (int e : reordered[static_cast<size_t>(c)]) scheme.order.push_back(e);
    return scheme;
}

EliminationScheme compute_dmees(const WeightedGraph& wg, TieBreak tie, std::uint64_t seed) {
    Slices s = slice(wg);
    CopyOrder order = order_copies(wg, s, tie, seed);
    return order_edges(wg, s, order);
}

VerifyResult verify_dmees(const WeightedGraph& wg, const EliminationScheme& scheme) {
    int n = wg.graph.vertex_count();
    int m = wg.graph.edge_count();
    if (static_cast<int>(scheme.order.size()) != m)
        throw std::invalid_argument("scheme is not a permutation of the edges");
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (int e : scheme.order) {
        if (e < 0 || e >= m || seen[static_cast<size_t>(e)])
            throw std::invalid_argument("scheme is not a permutation of the edges");
        seen[static_cast<size_t>(e)] = 1;
    }

    std::vector<char> deleted(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        int e = scheme.order[static_cast<size_t>(i)];
        // degrees of the remaining graph, from scratch
        std::vector<int> deg(static_cast<size_t>(n), 0);
        int min_weight = wg.k + 1;
        for (int f = 0; f < m; ++f) {
            if (deleted[static_cast<size_t>(f)]) continue;
            const Edge& edge = wg.graph.edge(f);
            ++deg[static_cast<size_t>(edge.u)];
            ++deg[static_cast<size_t>(edge.v)];
            min_weight = std::min(min_weight, wg.weight[static_cast<size_t>(f)]);
        }
        if (wg.weight[static_cast<size_t>(e)] != min_weight) return {false, i + 1};

        // F = remaining minimum-weight edges
        auto in_f = [&](int f) {
            return !deleted[static_cast<size_t>(f)] && wg.weight[static_cast<size_t>(f)] == min_weight;
        };
        int min_incident = n;
        for (int f = 0; f < m; ++f)
            if (in_f(f)) {
                min_incident = std::min(min_incident, deg[static_cast<size_t>(wg.graph.edge(f).u)]);
                min_incident = std::min(min_incident, deg[static_cast<size_t>(wg.graph.edge(f).v)]);
            }
        auto oriented_ok = [&](Vertex u, Vertex v) {
            if (deg[static_cast<size_t>(u)] != min_incident) return false;
            int min_partner = n;
            for (int f = 0; f < m; ++f) {
                if (!in_f(f)) continue;
                const Edge& edge = wg.graph.edge(f);
                if (edge.u == u) min_partner = std::min(min_partner, deg[static_cast<size_t>(edge.v)]);
                if (edge.v == u) min_partner = std::min(min_partner, deg[static_cast<size_t>(edge.u)]);
            }
            return deg[static_cast<size_t>(v)] == min_partner;
        };
        const Edge& edge = wg.graph.edge(e);
        if (!oriented_ok(edge.u, edge.v) && !oriented_ok(edge.v, edge.u)) return {false, i + 1};
        deleted[static_cast<size_t>(e)] = 1;
    }
    return {true, 0};
}

EliminationScheme parse_scheme(const std::string& text, const WeightedGraph& wg) {
    std::map<std::pair<Vertex, Vertex>, int> by_endpoints;
    for (int e = 0; e < wg.graph.edge_count(); ++e) {
        const Edge& edge = wg.graph.edge(e);
        by_endpoints[{std::min(edge.u, edge.v), std::max(edge.u, edge.v)}] = e;
    }
    EliminationScheme scheme;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    std::vector<char> used(static_cast<size_t>(wg.graph.edge_count()), 0);
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t start = raw.find_first_not_of(" \t");
        if (start == std::string::npos || raw[start] == '#') continue;
        std::istringstream line(raw);
        long long u, v, w;
        if (!(line >> u >> v >> w)) throw ParseError(number, "expected 'u v w'");
        if (u < 1 || u > wg.graph.vertex_count() || v < 1 || v > wg.graph.vertex_count())
            throw ParseError(number, "vertex id out of range");
        Vertex a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
        auto it = by_endpoints.find({std::min(a, b), std::max(a, b)});
        if (it == by_endpoints.end()) throw ParseError(number, "edge not in graph");
        if (wg.weight[static_cast<size_t>(it->second)] != w)
            throw ParseError(number, "weight mismatch");
        if (used[static_cast<size_t>(it->second)]) throw ParseError(number, "edge repeated");
        used[static_cast<size_t>(it->second)] = 1;
        scheme.order.push_back(it->second);
    }
    if (static_cast<int>(scheme.order.size()) != wg.graph.edge_count())
        throw ParseError(number, "scheme does not cover all edges");
    return scheme;
}

std::string emit_scheme(const WeightedGraph& wg, const EliminationScheme& scheme) {
    std::ostringstream out;
    for (int e : scheme.order) {
        const Edge& edge = wg.graph.edge(e);
        out << edge.u + 1 << ' ' << edge.v + 1 << ' ' << wg.weight[static_cast<size_t>(e)] << '\n';
    }
    return out.str();
}

}  // namespace lvg
