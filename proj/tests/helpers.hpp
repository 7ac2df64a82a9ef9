#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "lvg/graph.hpp"
#include "lvg/patterns.hpp"
#include "lvg/recognizers.hpp"

namespace testutil {

inline lvg::Graph graph_from(int n, std::vector<std::pair<int, int>> pairs) {
    std::vector<lvg::Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return lvg::Graph::from_edges(n, edges);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline lvg::WeightedGraph load_fixture() {
    return lvg::parse_weighted(read_file(std::string(LVG_FIXTURE_DIR) + "/levels3_17.wg"));
}

// every labeled graph on n vertices, one per edge bitmask
inline void for_all_graphs(int n, const std::function<void(const lvg::Graph&)>& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (unsigned long long mask = 0; mask < (1ULL << slots.size()); ++mask) {
        std::vector<lvg::Edge> edges;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1ULL) edges.push_back({slots[i].first, slots[i].second});
        fn(lvg::Graph::from_edges(n, edges));
    }
}

// every threshold graph on n vertices, one per isolated/dominating sequence
inline void for_all_threshold(int n, const std::function<void(const lvg::Graph&)>& fn) {
    int steps = n - 1;
    for (unsigned long long mask = 0; mask < (1ULL << steps); ++mask) {
        std::vector<lvg::Edge> edges;
        for (int v = 1; v < n; ++v)
            if (mask >> (v - 1) & 1ULL)
                for (int u = 0; u < v; ++u) edges.push_back({u, v});
        fn(lvg::Graph::from_edges(n, edges));
    }
}

// split graphs: clique prefix, independent suffix, every cross-edge subset.
// Covers every split graph on n vertices up to relabeling.
inline void for_all_split(int n, const std::function<void(const lvg::Graph&)>& fn,
                          int max_cross_bits = 20) {
    for (int c = 0; c <= n; ++c) {
        int cross_slots = c * (n - c);
        if (cross_slots > max_cross_bits) continue;
        std::vector<lvg::Edge> base;
        for (int u = 0; u < c; ++u)
            for (int v = u + 1; v < c; ++v) base.push_back({u, v});
        for (unsigned long long mask = 0; mask < (1ULL << cross_slots); ++mask) {
            std::vector<lvg::Edge> edges = base;
            int slot = 0;
            for (int u = 0; u < c; ++u)
                for (int v = c; v < n; ++v, ++slot)
                    if (mask >> slot & 1ULL) edges.push_back({u, v});
            fn(lvg::Graph::from_edges(n, edges));
        }
    }
}

// chain graphs: every staircase shape with every split of n vertices over the
// groups and the isolated pool
inline void for_all_chain(int n, const std::function<void(const lvg::Graph&)>& fn) {
    // compositions: group count g, sizes a_1,b_1..a_g,b_g >= 1, remainder isolated
    std::function<void(int, std::vector<int>&)> rec = [&](int left, std::vector<int>& sizes) {
        if (sizes.size() % 2 == 0 && !sizes.empty()) {
            // complete staircase possible; also allow extending
            int g = static_cast<int>(sizes.size()) / 2;
            std::vector<lvg::Edge> edges;
            std::vector<std::pair<int, int>> a_range, b_range;
            int next = 0;
            for (int i = 0; i < g; ++i) {
                a_range.emplace_back(next, next + sizes[static_cast<size_t>(2 * i)]);
                next += sizes[static_cast<size_t>(2 * i)];
                b_range.emplace_back(next, next + sizes[static_cast<size_t>(2 * i) + 1]);
                next += sizes[static_cast<size_t>(2 * i) + 1];
            }
            for (int i = 0; i < g; ++i)
                for (int j = i; j < g; ++j)
                    for (int x = a_range[static_cast<size_t>(i)].first; x < a_range[static_cast<size_t>(i)].second; ++x)
                        for (int y = b_range[static_cast<size_t>(j)].first; y < b_range[static_cast<size_t>(j)].second; ++y)
                            edges.push_back({x, y});
            fn(lvg::Graph::from_edges(n, edges));
        }
        for (int s = 1; s <= left; ++s) {
            sizes.push_back(s);
            rec(left - s, sizes);
            sizes.pop_back();
        }
    };
    std::vector<int> sizes;
    fn(lvg::Graph(n));  // edgeless
    rec(n, sizes);
}

inline bool is_bipartite(const lvg::Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const lvg::Incidence& inc : g.neighbors(v)) {
                if (color[static_cast<size_t>(inc.to)] == -1) {
                    color[static_cast<size_t>(inc.to)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(inc.to);
                } else if (color[static_cast<size_t>(inc.to)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// independent induced-pattern oracle: tries every injective mapping of the
// pattern's vertices onto every subset
inline bool has_induced(const lvg::Graph& g, lvg::Pattern p) {
    using lvg::Pattern;
    int size = (p == Pattern::C5) ? 5 : 4;
    std::vector<std::pair<int, int>> pat;
    switch (p) {
        case Pattern::TwoK2: pat = {{0, 1}, {2, 3}}; break;
        case Pattern::C4: pat = {{0, 1}, {1, 2}, {2, 3}, {3, 0}}; break;
        case Pattern::C5: pat = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}; break;
        case Pattern::P4: pat = {{0, 1}, {1, 2}, {2, 3}}; break;
        case Pattern::Diamond: pat = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}; break;
        case Pattern::Paw: pat = {{0, 1}, {1, 2}, {2, 0}, {2, 3}}; break;
    }
    int n = g.vertex_count();
    if (n < size) return false;
    std::vector<int> verts(static_cast<size_t>(size));
    std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
        if (idx == size) {
            std::vector<int> perm(static_cast<size_t>(size));
            for (int i = 0; i < size; ++i) perm[static_cast<size_t>(i)] = i;
            do {
                bool ok = true;
                for (int i = 0; i < size && ok; ++i)
                    for (int j = i + 1; j < size && ok; ++j) {
                        bool want = false;
                        for (auto [a, b] : pat)
                            if ((a == perm[static_cast<size_t>(i)] && b == perm[static_cast<size_t>(j)]) ||
                                (a == perm[static_cast<size_t>(j)] && b == perm[static_cast<size_t>(i)]))
                                want = true;
                        if (g.has_edge(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]) != want)
                            ok = false;
                    }
                if (ok) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int v = from; v < n; ++v) {
            verts[static_cast<size_t>(idx)] = v;
            if (choose(idx + 1, v + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

}  // namespace testutil
