#pragma once

#include <optional>
#include <vector>

#include "lvg/graph.hpp"

namespace lvg {

enum class Pattern { TwoK2, C4, C5, P4, Diamond, Paw };

const char* pattern_name(Pattern p);

/// An induced occurrence of a small pattern. For P4 and diamond the
/// distinguished edge is the middle edge, for the paw one side edge.
struct PatternWitness {
    Pattern pattern;
    std::vector<Vertex> vertices;
    std::optional<Edge> distinguished_edge;
};

// Exhaustive induced-subgraph search over 4- and 5-vertex subsets.
// Oracle-grade: meant for small graphs, not the recognition pipeline.
std::optional<PatternWitness> find_forbidden(const Graph& g, const std::vector<Pattern>& patterns);

}  // namespace lvg
