#include "lvg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace lvg {

namespace {

Graph gen_split(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> csize(1, n);
    int c = csize(rng);
    std::uniform_real_distribution<double> prob(0.05, 0.95);
    double p = prob(rng);
    std::bernoulli_distribution cross(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < c; ++u)
        for (Vertex v = u + 1; v < c; ++v) edges.push_back({u, v});
    for (Vertex u = 0; u < c; ++u)
        for (Vertex v = c; v < n; ++v)
            if (cross(rng)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph gen_threshold(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution dominating(0.5);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        if (dominating(rng))
            for (Vertex u = 0; u < v; ++u) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

// Staircase: ordered groups A_1,B_1,...,A_g,B_g plus leftovers; x in A_i is
// adjacent to y in B_j iff i <= j.
struct Staircase {
    std::vector<std::vector<Vertex>> a, b;
    int n = 0;
};

Staircase gen_staircase(int n, std::mt19937_64& rng) {
    Staircase st;
    st.n = n;
    if (n < 2) return st;
    std::uniform_int_distribution<int> gcount(1, std::max(1, n / 2));
    int g = gcount(rng);
    std::vector<int> sizes(static_cast<size_t>(2 * g), 1);
    int spare = n - 2 * g;
    if (spare < 0) {
        g = n / 2;
        sizes.assign(static_cast<size_t>(2 * g), 1);
        spare = n - 2 * g;
    }
    if (g == 0) return st;
    // distribute spare vertices over the groups and the isolated pool
    std::uniform_int_distribution<int> slot(0, 2 * g);
    for (int i = 0; i < spare; ++i) {
        int s = slot(rng);
        if (s < 2 * g) ++sizes[static_cast<size_t>(s)];
    }
    Vertex next = 0;
    st.a.resize(static_cast<size_t>(g));
    st.b.resize(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < sizes[static_cast<size_t>(2 * i)]; ++j) st.a[static_cast<size_t>(i)].push_back(next++);
        for (int j = 0; j < sizes[static_cast<size_t>(2 * i) + 1]; ++j) st.b[static_cast<size_t>(i)].push_back(next++);
    }
    return st;
}

Graph staircase_graph(const Staircase& st) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < st.a.size(); ++i)
        for (size_t j = i; j < st.b.size(); ++j)
            for (Vertex x : st.a[i])
                for (Vertex y : st.b[j]) edges.push_back({x, y});
    return Graph::from_edges(st.n, edges);
}

WeightedGraph with_dense_weights(Graph g, std::vector<int> weights) {
    WeightedGraph wg;
    int maxw = 0;
    for (int w : weights) maxw = std::max(maxw, w);
    std::vector<int> used(static_cast<size_t>(maxw) + 1, 0);
    for (int w : weights) used[static_cast<size_t>(w)] = 1;
    std::vector<int> remap(static_cast<size_t>(maxw) + 1, 0);
    int next = 0;
    for (int w = 1; w <= maxw; ++w)
        if (used[static_cast<size_t>(w)]) remap[static_cast<size_t>(w)] = ++next;
    for (int& w : weights) w = remap[static_cast<size_t>(w)];
    wg.graph = std::move(g);
    wg.weight = std::move(weights);
    wg.k = next;
    return wg;
}

// Peel safe edges one at a time; the reverse order cut into k buckets gives
// nested in-class level graphs. Small instances only.
WeightedGraph peel_level_instance(ClassId c, const Graph& g, int k, std::mt19937_64& rng) {
    int m = g.edge_count();
    Graph cur = g;
    std::vector<int> deletion_order;  // edge ids of the original graph
    std::vector<int> alive(static_cast<size_t>(m));
    std::iota(alive.begin(), alive.end(), 0);
    // map current graph edge index -> original edge id, maintained across rebuilds
    while (cur.edge_count() > 0) {
        std::vector<int> shuffled(static_cast<size_t>(cur.edge_count()));
        std::iota(shuffled.begin(), shuffled.end(), 0);
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        int chosen = -1;
        for (int e : shuffled)
            if (safe_edge(c, cur, e)) {
                chosen = e;
                break;
            }
        if (chosen < 0) throw std::logic_error("no safe edge found in a class member");
        deletion_order.push_back(alive[static_cast<size_t>(chosen)]);
        alive.erase(alive.begin() + chosen);
        cur = cur.without_edge(chosen);
    }
    // weights non-decreasing along the deletion order, k buckets
    int kk = std::min(k, std::max(m, 0));
    std::vector<int> weights(static_cast<size_t>(m), 1);
    for (int j = 0; j < m; ++j) {
        int bucket = kk <= 1 ? 1 : 1 + static_cast<int>((static_cast<long long>(j) * kk) / m);
        weights[static_cast<size_t>(deletion_order[static_cast<size_t>(j)])] = std::min(bucket, kk);
    }
    return with_dense_weights(g, std::move(weights));
}

}  // namespace

Graph gen_class_graph(ClassId c, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (n <= 1) return Graph(std::max(n, 1));
    switch (c) {
        case ClassId::Split: return gen_split(n, rng);
        case ClassId::Threshold: return gen_threshold(n, rng);
        case ClassId::Chain: return staircase_graph(gen_staircase(n, rng));
    }
    return Graph(n);
}

WeightedGraph gen_level_instance(const GenSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    Graph g;
    for (int attempt = 0;; ++attempt) {
        std::uint64_t sub = rng();
        g = gen_class_graph(spec.cls, spec.n, sub);
        if (g.edge_count() > 0 || spec.k == 0 || spec.n < 2 || attempt > 100) break;
    }
    WeightedGraph wg;
    if (g.edge_count() == 0) {
        wg.graph = std::move(g);
        wg.k = 0;
        return wg;
    }
    wg = peel_level_instance(spec.cls, g, std::max(spec.k, 1), rng);
    if (spec.perturb && wg.graph.edge_count() >= 2) {
        std::uniform_int_distribution<int> pick(0, wg.graph.edge_count() - 1);
        int a = pick(rng), b = pick(rng);
        std::swap(wg.weight[static_cast<size_t>(a)], wg.weight[static_cast<size_t>(b)]);
    }
    return wg;
}

WeightedGraph gen_random_weighted(int n, double edge_prob, int max_k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    Graph g = Graph::from_edges(n, edges);
    int m = g.edge_count();
    if (m == 0) {
        WeightedGraph wg;
        wg.graph = std::move(g);
        wg.k = 0;
        return wg;
    }
    std::uniform_int_distribution<int> wdist(1, std::max(1, std::min(max_k, m)));
    std::vector<int> weights(static_cast<size_t>(m));
    for (int& w : weights) w = wdist(rng);
    return with_dense_weights(std::move(g), std::move(weights));
}

WeightedGraph gen_scaled_yes_instance(ClassId c, long long target_edges, int k,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<int> weights;
    int n = 0;

    auto covered_weight = [&](long long index) {
        // first k draws cover 1..k, the rest uniform
        if (index < k) return static_cast<int>(index) + 1;
        return std::uniform_int_distribution<int>(1, k)(rng);
    };

    switch (c) {
        case ClassId::Split: {
            int clique = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(target_edges))));
            long long clique_edges = static_cast<long long>(clique) * (clique - 1) / 2;
            long long cross = std::max<long long>(0, target_edges - clique_edges);
            int per_vertex = std::max(1, clique / 2);
            int isolated_side = static_cast<int>((cross + per_vertex - 1) / per_vertex);
            n = clique + isolated_side;
            long long placed = 0;
            for (Vertex u = 0; u < clique; ++u)
                for (Vertex v = u + 1; v < clique; ++v) {
                    edges.push_back({u, v});
                    weights.push_back(k);
                }
            std::uniform_int_distribution<int> cdist(0, clique - 1);
            for (Vertex v = clique; v < n && placed < cross; ++v) {
                int want = static_cast<int>(std::min<long long>(per_vertex, cross - placed));
                // distinct clique neighbors for this vertex
                std::vector<Vertex> nbrs;
                while (static_cast<int>(nbrs.size()) < want) {
                    Vertex u = cdist(rng);
                    if (std::find(nbrs.begin(), nbrs.end(), u) == nbrs.end()) nbrs.push_back(u);
                }
                for (Vertex u : nbrs) {
                    edges.push_back({u, v});
                    weights.push_back(covered_weight(placed));
                    ++placed;
                }
            }
            break;
        }
        case ClassId::Threshold: {
            std::bernoulli_distribution dominating(0.7);
            long long placed = 0;
            std::vector<char> kind;  // 1 = dominating
            while (placed < target_edges) {
                bool dom = kind.empty() ? false : dominating(rng);
                if (dom) placed += static_cast<long long>(kind.size());
                kind.push_back(dom ? 1 : 0);
            }
            n = static_cast<int>(kind.size());
            long long index = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (!kind[static_cast<size_t>(v)]) continue;
                int w = covered_weight(index++);
                for (Vertex u = 0; u < v; ++u) {
                    edges.push_back({u, v});
                    weights.push_back(w);
                }
            }
            break;
        }
        case ClassId::Chain: {
            int groups = std::max(2, k);
            double per = 2.0 * static_cast<double>(target_edges) /
                         (static_cast<double>(groups) * (groups + 1));
            int size = std::max(1, static_cast<int>(std::llround(std::sqrt(per))));
            n = 2 * groups * size;
            std::vector<int> gweight(static_cast<size_t>(groups));
            for (int j = 0; j < groups; ++j) gweight[static_cast<size_t>(j)] = covered_weight(j);
            auto a_vertex = [&](int i, int s) { return 2 * size * i + s; };
            auto b_vertex = [&](int j, int s) { return 2 * size * j + size + s; };
            for (int i = 0; i < groups; ++i)
                for (int j = i; j < groups; ++j)
                    for (int s = 0; s < size; ++s)
                        for (int t = 0; t < size; ++t) {
                            edges.push_back({a_vertex(i, s), b_vertex(j, t)});
                            weights.push_back(gweight[static_cast<size_t>(j)]);
                        }
            break;
        }
    }
    return with_dense_weights(Graph::from_edges(n, edges), std::move(weights));
}

}  // namespace lvg
