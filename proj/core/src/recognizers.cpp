#include "lvg/recognizers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "lvg/bucket_order.hpp"

namespace lvg {

const char* class_name(ClassId c) {
    switch (c) {
        case ClassId::Split: return "split";
        case ClassId::Threshold: return "threshold";
        case ClassId::Chain: return "chain";
    }
    return "?";
}

std::optional<ClassId> class_from_name(const std::string& name) {
    if (name == "split") return ClassId::Split;
    if (name == "threshold") return ClassId::Threshold;
    if (name == "chain") return ClassId::Chain;
    return std::nullopt;
}

std::optional<SplitPartition> is_split(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    // counting sort by degree descending, higher id first within ties
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) ++count[static_cast<size_t>(g.degree(v))];
    std::vector<int> start(static_cast<size_t>(n) + 1, 0);
    for (int d = n - 1; d >= 0; --d)
        start[static_cast<size_t>(d)] =
            start[static_cast<size_t>(d) + 1] + count[static_cast<size_t>(d)];
    // start[d] = number of vertices with degree > d; fill descending ids per bucket
    std::vector<int> cursor(start.begin() + 1, start.end());
    for (Vertex v = n - 1; v >= 0; --v)
        order[static_cast<size_t>(cursor[static_cast<size_t>(g.degree(v))]++)] = v;

    long long top = 0, rest = 0;
    int h = 0;
    for (int i = 1; i <= n; ++i) {
        int d = g.degree(order[static_cast<size_t>(i - 1)]);
        if (d >= i - 1) h = i;
    }
    for (int i = 0; i < n; ++i) {
        int d = g.degree(order[static_cast<size_t>(i)]);
        if (i < h)
            top += d;
        else
            rest += d;
    }
    if (top != static_cast<long long>(h) * (h - 1) + rest) return std::nullopt;

    SplitPartition sp;
    sp.clique.assign(order.begin(), order.begin() + h);
    sp.independent.assign(order.begin() + h, order.end());
    std::sort(sp.clique.begin(), sp.clique.end());
    std::sort(sp.independent.begin(), sp.independent.end());
    return sp;
}

bool is_threshold(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<int> degrees(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) degrees[static_cast<size_t>(v)] = g.degree(v);
    BucketOrder bo(degrees, 0, std::max(n - 1, 0));

    // Effective degree of a live vertex is its key minus the number of
    // dominating vertices removed so far.
    int dominating_removed = 0;
    while (!bo.empty()) {
        int live = bo.size();
        if (bo.min_key() - dominating_removed == 0) {
            bo.delete_min();
        } else if (bo.max_key() - dominating_removed == live - 1) {
            bo.delete_max();
            ++dominating_removed;
        } else {
            return false;
        }
    }
    return true;
}

std::optional<ChainPartition> chain_partition(const Graph& g) {
    int n = g.vertex_count();
    ChainPartition cp;
    std::vector<char> live(static_cast<size_t>(n), 0);
    std::vector<Vertex> live_vertices;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            cp.isolated.push_back(v);
        else {
            live[static_cast<size_t>(v)] = 1;
            live_vertices.push_back(v);
        }
    }
    if (live_vertices.empty()) return cp;

    // 2-color; a chain graph has at most one component with edges
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::deque<Vertex> queue;
    Vertex root = live_vertices.front();
    color[static_cast<size_t>(root)] = 0;
    queue.push_back(root);
    int reached = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        ++reached;
        for (const Incidence& inc : g.neighbors(v)) {
            if (color[static_cast<size_t>(inc.to)] == -1) {
                color[static_cast<size_t>(inc.to)] = 1 - color[static_cast<size_t>(v)];
                queue.push_back(inc.to);
            } else if (color[static_cast<size_t>(inc.to)] == color[static_cast<size_t>(v)]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    if (reached != static_cast<int>(live_vertices.size()))
        return std::nullopt;  // two edge-bearing components form a 2K2

    // Side A holds the lowest-id non-isolated vertex (= root).
    std::vector<Vertex> side_a, side_b;
    for (Vertex v : live_vertices)
        (color[static_cast<size_t>(v)] == 0 ? side_a : side_b).push_back(v);

    auto make_keys = [&](const std::vector<Vertex>& side) {
        std::vector<int> keys(side.size());
        for (size_t i = 0; i < side.size(); ++i) keys[i] = g.degree(side[i]);
        return keys;
    };
    std::vector<int> local(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < side_a.size(); ++i) local[static_cast<size_t>(side_a[i])] = static_cast<int>(i);
    for (size_t i = 0; i < side_b.size(); ++i) local[static_cast<size_t>(side_b[i])] = static_cast<int>(i);
    auto keys_a = make_keys(side_a);
    auto keys_b = make_keys(side_b);
    BucketOrder deg_a(keys_a, 0, n - 1);
    BucketOrder deg_b(keys_b, 0, n - 1);

    std::deque<std::pair<std::vector<Vertex>, std::vector<Vertex>>> groups;
    while (!deg_a.empty() || !deg_b.empty()) {
        int a_live = deg_a.size();
        std::vector<Vertex> group_b;
        while (!deg_b.empty() && deg_b.max_key() == a_live)
            group_b.push_back(side_b[static_cast<size_t>(deg_b.delete_max())]);
        if (group_b.empty()) return std::nullopt;  // no B vertex dominates side A
        for (Vertex b : group_b) {
            live[static_cast<size_t>(b)] = 0;
            for (const Incidence& inc : g.neighbors(b))
                if (live[static_cast<size_t>(inc.to)])
                    deg_a.decrease_key(local[static_cast<size_t>(inc.to)]);
        }
        std::vector<Vertex> group_a;
        while (!deg_a.empty() && deg_a.min_key() == 0) {
            Vertex a = side_a[static_cast<size_t>(deg_a.delete_min())];
            live[static_cast<size_t>(a)] = 0;
            group_a.push_back(a);
        }
        if (group_a.empty()) return std::nullopt;
        groups.emplace_front(std::move(group_a), std::move(group_b));
    }
    cp.groups.assign(groups.begin(), groups.end());
    return cp;
}

bool chain_partition_valid(const Graph& g, const ChainPartition& cp) {
    int n = g.vertex_count();
    std::vector<int> group_of(static_cast<size_t>(n), -2);  // -1 = isolated set
    std::vector<int> side_of(static_cast<size_t>(n), -1);   // 0 = A, 1 = B
    for (Vertex v : cp.isolated) {
        if (v < 0 || v >= n || group_of[static_cast<size_t>(v)] != -2) return false;
        group_of[static_cast<size_t>(v)] = -1;
        if (g.degree(v) != 0) return false;
    }
    for (size_t i = 0; i < cp.groups.size(); ++i) {
        const auto& [a, b] = cp.groups[i];
        if (a.empty() || b.empty()) return false;
        for (Vertex v : a) {
            if (v < 0 || v >= n || group_of[static_cast<size_t>(v)] != -2) return false;
            group_of[static_cast<size_t>(v)] = static_cast<int>(i);
            side_of[static_cast<size_t>(v)] = 0;
        }
        for (Vertex v : b) {
            if (v < 0 || v >= n || group_of[static_cast<size_t>(v)] != -2) return false;
            group_of[static_cast<size_t>(v)] = static_cast<int>(i);
            side_of[static_cast<size_t>(v)] = 1;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (group_of[static_cast<size_t>(v)] == -2) return false;

    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            bool expected = false;
            int gx = group_of[static_cast<size_t>(x)], gy = group_of[static_cast<size_t>(y)];
            if (gx >= 0 && gy >= 0 && side_of[static_cast<size_t>(x)] != side_of[static_cast<size_t>(y)]) {
                Vertex in_a = side_of[static_cast<size_t>(x)] == 0 ? x : y;
                Vertex in_b = in_a == x ? y : x;
                expected = group_of[static_cast<size_t>(in_a)] <= group_of[static_cast<size_t>(in_b)];
            }
            if (g.has_edge(x, y) != expected) return false;
        }
    }
    return true;
}

bool in_class(ClassId c, const Graph& g) {
    switch (c) {
        case ClassId::Split: return is_split(g).has_value();
        case ClassId::Threshold: return is_threshold(g);
        case ClassId::Chain: return chain_partition(g).has_value();
    }
    return false;
}

namespace {

std::vector<char> neighbor_marks(const Graph& g, Vertex v) {
    std::vector<char> mark(static_cast<size_t>(g.vertex_count()), 0);
    for (const Incidence& inc : g.neighbors(v)) mark[static_cast<size_t>(inc.to)] = 1;
    return mark;
}

// xy is the middle edge of an induced P4: u-x-y-v with ux, yv edges and
// uv, uy, xv non-edges.
bool middle_of_p4(const Graph& g, Vertex x, Vertex y) {
    auto nx = neighbor_marks(g, x);
    auto ny = neighbor_marks(g, y);
    for (const Incidence& iu : g.neighbors(x)) {
        Vertex u = iu.to;
        if (u == y || ny[static_cast<size_t>(u)]) continue;
        for (const Incidence& iv : g.neighbors(y)) {
            Vertex v = iv.to;
            if (v == x || nx[static_cast<size_t>(v)]) continue;
            if (!g.has_edge(u, v)) return true;
        }
    }
    return false;
}

// xy is the middle edge of an induced diamond: two common neighbors that are
// themselves non-adjacent.
bool middle_of_diamond(const Graph& g, Vertex x, Vertex y) {
    auto ny = neighbor_marks(g, y);
    std::vector<Vertex> common;
    for (const Incidence& inc : g.neighbors(x))
        if (inc.to != y && ny[static_cast<size_t>(inc.to)]) common.push_back(inc.to);
    for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j)
            if (!g.has_edge(common[i], common[j])) return true;
    return false;
}

// xy is a side edge of an induced paw with hub y: a pendant a seen only by y
// and a triangle partner d of both, with ad a non-edge.
bool paw_side_oriented(const Graph& g, Vertex x, Vertex y) {
    auto nx = neighbor_marks(g, x);
    auto ny = neighbor_marks(g, y);
    for (const Incidence& ia : g.neighbors(y)) {
        Vertex a = ia.to;
        if (a == x || nx[static_cast<size_t>(a)]) continue;
        for (const Incidence& id : g.neighbors(x)) {
            Vertex d = id.to;
            if (d == y || !ny[static_cast<size_t>(d)]) continue;
            if (!g.has_edge(a, d)) return true;
        }
    }
    return false;
}

bool paw_side(const Graph& g, Vertex x, Vertex y) {
    return paw_side_oriented(g, x, y) || paw_side_oriented(g, y, x);
}

void require_member(ClassId c, const Graph& g) {
    if (!in_class(c, g))
        throw std::invalid_argument(std::string("graph is not ") + class_name(c));
}

}  // namespace

bool safe_edge(ClassId c, const Graph& g, int e) {
    require_member(c, g);
    Vertex x = g.edge(e).u, y = g.edge(e).v;
    switch (c) {
        case ClassId::Split: return !middle_of_p4(g, x, y) && !middle_of_diamond(g, x, y);
        case ClassId::Threshold: return !middle_of_diamond(g, x, y) && !paw_side(g, x, y);
        case ClassId::Chain: return !middle_of_p4(g, x, y);
    }
    return false;
}

bool brute_safe(ClassId c, const Graph& g, int e) {
    require_member(c, g);
    return in_class(c, g.without_edge(e));
}

}  // namespace lvg
