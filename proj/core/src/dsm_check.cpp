#include "lvg/dsm_check.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lvg/generators.hpp"

namespace lvg {

namespace {

std::string describe(const Graph& g, const std::vector<int>& f, int edge, const char* what) {
    std::ostringstream out;
    out << what << ": n=" << g.vertex_count() << " edges";
    for (int e = 0; e < g.edge_count(); ++e)
        out << ' ' << g.edge(e).u << '-' << g.edge(e).v;
    out << " F";
    for (int e : f) out << ' ' << g.edge(e).u << '-' << g.edge(e).v;
    out << " offending " << g.edge(edge).u << '-' << g.edge(edge).v;
    return out.str();
}

// Does (u, v) satisfy both clauses of degree-minimality in F?
bool oriented_degree_minimal(const Graph& g, const std::vector<char>& in_f, Vertex u, Vertex v) {
    int min_incident = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_f[static_cast<size_t>(e)]) continue;
        min_incident = std::min({min_incident, g.degree(g.edge(e).u), g.degree(g.edge(e).v)});
    }
    if (g.degree(u) != min_incident) return false;
    int min_partner = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_f[static_cast<size_t>(e)]) continue;
        if (g.edge(e).u == u) min_partner = std::min(min_partner, g.degree(g.edge(e).v));
        if (g.edge(e).v == u) min_partner = std::min(min_partner, g.degree(g.edge(e).u));
    }
    return g.degree(v) == min_partner;
}

}  // namespace

DsmReport dsm_property_check(ClassId c, int trials, int n_max, std::uint64_t seed) {
    DsmReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nsize(2, std::max(2, n_max));

    for (int t = 0; t < trials; ++t) {
        ++report.trials;
        Graph g = gen_class_graph(c, nsize(rng), rng());
        int m = g.edge_count();
        if (m == 0) continue;

        // a safe set: random subsets filtered by re-recognition, then the
        // minimum-weight edges of a random weighting, then the full edge set
        std::vector<char> in_f(static_cast<size_t>(m), 0);
        bool found = false;
        std::bernoulli_distribution coin(0.5);
        for (int attempt = 0; attempt < 50 && !found; ++attempt) {
            std::vector<bool> del(static_cast<size_t>(m), false);
            int chosen = 0;
            for (int e = 0; e < m; ++e)
                if (coin(rng)) {
                    del[static_cast<size_t>(e)] = true;
                    ++chosen;
                }
            if (chosen == 0) continue;
            if (in_class(c, g.without_edges(del))) {
                for (int e = 0; e < m; ++e) in_f[static_cast<size_t>(e)] = del[static_cast<size_t>(e)];
                found = true;
            }
        }
        if (!found) {
            std::uniform_int_distribution<int> wdist(1, std::max(2, m / 2));
            std::vector<int> w(static_cast<size_t>(m));
            for (int& x : w) x = wdist(rng);
            int minw = *std::min_element(w.begin(), w.end());
            std::vector<bool> del(static_cast<size_t>(m), false);
            for (int e = 0; e < m; ++e) del[static_cast<size_t>(e)] = w[static_cast<size_t>(e)] == minw;
            if (in_class(c, g.without_edges(del))) {
                for (int e = 0; e < m; ++e) in_f[static_cast<size_t>(e)] = del[static_cast<size_t>(e)];
                found = true;
            }
        }
        if (!found) {
            // grounded classes: removing every edge stays in the class
            for (int e = 0; e < m; ++e) in_f[static_cast<size_t>(e)] = 1;
        }
        ++report.safe_sets_sampled;

        std::vector<int> f_edges;
        for (int e = 0; e < m; ++e)
            if (in_f[static_cast<size_t>(e)]) f_edges.push_back(e);

        for (int e : f_edges) {
            Vertex u = g.edge(e).u, v = g.edge(e).v;
            bool uv = oriented_degree_minimal(g, in_f, u, v);
            bool vu = oriented_degree_minimal(g, in_f, v, u);
            if (!uv && !vu) continue;
            ++report.degree_minimal_edges;
            if (!brute_safe(c, g, e))
                report.counterexamples.push_back(describe(g, f_edges, e, "degree-minimal edge unsafe"));
            // neighbor-degree law for each valid orientation (x, y):
            // every F-partner z of x has degree at least deg(y)
            for (int orient = 0; orient < 2; ++orient) {
                if (orient == 0 && !uv) continue;
                if (orient == 1 && !vu) continue;
                Vertex x = orient == 0 ? u : v;
                Vertex y = orient == 0 ? v : u;
                for (int f : f_edges) {
                    Vertex z;
                    if (g.edge(f).u == x)
                        z = g.edge(f).v;
                    else if (g.edge(f).v == x)
                        z = g.edge(f).u;
                    else
                        continue;
                    ++report.neighbor_degree_checks;
                    if (g.degree(z) < g.degree(y))
                        report.counterexamples.push_back(
                            describe(g, f_edges, f, "neighbor-degree violation"));
                }
            }
        }
    }
    return report;
}

}  // namespace lvg
