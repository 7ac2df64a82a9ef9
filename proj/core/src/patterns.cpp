#include "lvg/patterns.hpp"

#include <algorithm>
#include <array>

namespace lvg {

const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::TwoK2: return "2K2";
        case Pattern::C4: return "C4";
        case Pattern::C5: return "C5";
        case Pattern::P4: return "P4";
        case Pattern::Diamond: return "diamond";
        case Pattern::Paw: return "paw";
    }
    return "?";
}

namespace {

bool wants(const std::vector<Pattern>& patterns, Pattern p) {
    return std::find(patterns.begin(), patterns.end(), p) != patterns.end();
}

// Adjacency among the chosen subset, m[i][j] over local indices.
template <size_t N>
std::array<std::array<bool, N>, N> induced(const Graph& g, const std::array<Vertex, N>& vs) {
    std::array<std::array<bool, N>, N> m{};
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j) m[i][j] = m[j][i] = g.has_edge(vs[i], vs[j]);
    return m;
}

template <size_t N>
int local_degree(const std::array<std::array<bool, N>, N>& m, size_t i) {
    int d = 0;
    for (size_t j = 0; j < N; ++j) d += m[i][j];
    return d;
}

// Classifies the induced subgraph on four vertices against the requested
// 4-vertex patterns; fills the witness on a hit.
std::optional<PatternWitness> classify4(const Graph& g, const std::array<Vertex, 4>& vs,
                                        const std::vector<Pattern>& patterns) {
    auto m = induced(g, vs);
    int edges = 0;
    std::array<int, 4> deg{};
    for (size_t i = 0; i < 4; ++i) {
        deg[i] = local_degree(m, i);
        edges += deg[i];
    }
    edges /= 2;

    auto witness = [&](Pattern p, std::optional<Edge> dist) {
        PatternWitness w;
        w.pattern = p;
        w.vertices.assign(vs.begin(), vs.end());
        w.distinguished_edge = dist;
        return w;
    };

    if (edges == 2 && wants(patterns, Pattern::TwoK2)) {
        // two disjoint edges: every vertex has local degree 1
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; }))
            return witness(Pattern::TwoK2, std::nullopt);
    }
    if (edges == 3 && wants(patterns, Pattern::P4)) {
        // path: degrees 1,1,2,2 and connected (3 edges, no triangle)
        int ones = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
        int twos = static_cast<int>(std::count(deg.begin(), deg.end(), 2));
        if (ones == 2 && twos == 2) {
            size_t a = 4, b = 4;
            for (size_t i = 0; i < 4; ++i)
                if (deg[i] == 2) (a == 4 ? a : b) = i;
            if (m[a][b]) return witness(Pattern::P4, Edge{vs[a], vs[b]});
        }
    }
    if (edges == 4) {
        int threes = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
        if (threes == 0 && wants(patterns, Pattern::C4)) {
            if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
                return witness(Pattern::C4, std::nullopt);
        }
        if (threes == 1 && wants(patterns, Pattern::Paw)) {
            // triangle plus pendant: degrees 3,2,2,1; side edge = hub to a degree-2 vertex
            size_t hub = 0, leg = 0;
            bool have_leg = false;
            for (size_t i = 0; i < 4; ++i)
                if (deg[i] == 3) hub = i;
            for (size_t i = 0; i < 4; ++i)
                if (deg[i] == 2 && !have_leg) { leg = i; have_leg = true; }
            if (have_leg) return witness(Pattern::Paw, Edge{vs[hub], vs[leg]});
        }
    }
    if (edges == 5 && wants(patterns, Pattern::Diamond)) {
        size_t a = 4, b = 4;
        for (size_t i = 0; i < 4; ++i)
            if (deg[i] == 3) (a == 4 ? a : b) = i;
        if (a != 4 && b != 4) return witness(Pattern::Diamond, Edge{vs[a], vs[b]});
    }
    return std::nullopt;
}

std::optional<PatternWitness> classify5(const Graph& g, const std::array<Vertex, 5>& vs) {
    auto m = induced(g, vs);
    int edges = 0;
    for (size_t i = 0; i < 5; ++i) edges += local_degree(m, i);
    edges /= 2;
    if (edges != 5) return std::nullopt;
    for (size_t i = 0; i < 5; ++i)
        if (local_degree(m, i) != 2) return std::nullopt;
    // 2-regular on five vertices is either C5 or impossible
    PatternWitness w;
    w.pattern = Pattern::C5;
    w.vertices.assign(vs.begin(), vs.end());
    return w;
}

}  // namespace

std::optional<PatternWitness> find_forbidden(const Graph& g, const std::vector<Pattern>& patterns) {
    int n = g.vertex_count();
    bool want4 = wants(patterns, Pattern::TwoK2) || wants(patterns, Pattern::C4) ||
                 wants(patterns, Pattern::P4) || wants(patterns, Pattern::Diamond) ||
                 wants(patterns, Pattern::Paw);
    if (want4 && n >= 4) {
        std::array<Vertex, 4> vs{};
        for (vs[0] = 0; vs[0] < n; ++vs[0])
            for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
                for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
                    for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3])
                        if (auto w = classify4(g, vs, patterns)) return w;
    }
    if (wants(patterns, Pattern::C5) && n >= 5) {
        std::array<Vertex, 5> vs{};
        for (vs[0] = 0; vs[0] < n; ++vs[0])
            for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
                for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
                    for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3])
                        for (vs[4] = vs[3] + 1; vs[4] < n; ++vs[4])
                            if (auto w = classify5(g, vs)) return w;
    }
    return std::nullopt;
}

}  // namespace lvg
