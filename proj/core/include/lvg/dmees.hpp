#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lvg/graph.hpp"

namespace lvg {

/// Copy v_i of a vertex, present iff v has an edge of weight exactly i.
/// level_degree is the degree of v in the i-th level graph.
struct VertexCopy {
    Vertex vertex = -1;
    int level = 0;
    int level_degree = 0;
};

/// Phase-1 output: level copy sets with degrees, per-copy incident weight-i
/// edge lists in input order, and the weight-sorted edge permutation.
struct Slices {
    std::vector<VertexCopy> copies;
    std::vector<std::vector<int>> level_copies;  // level 1..k -> copy ids in creation order
    std::vector<std::vector<int>> copy_edges;    // copy id -> edges of its level at its vertex
    std::vector<std::array<int, 2>> edge_copies; // edge id -> {copy at u, copy at v}
    std::vector<int> edges_by_weight;            // edge ids, weight-sorted, input-stable
};

/// Total order on all copies (levels ascending; degree-minimal within) plus
/// the star partition of the edges it induces.
struct CopyOrder {
    std::vector<int> sigma;               // copy ids
    std::vector<std::vector<int>> stars;  // copy id -> owned edges, claim order
};

struct EliminationScheme {
    std::vector<int> order;  // edge ids, elimination order
};

struct VerifyResult {
    bool ok = false;
    int first_violation = 0;  // 1-based position, 0 when ok
};

enum class TieBreak {
    Stable,  // earliest-created copy among the scanned minimum-block window
    Seeded,  // uniform choice over the minimum block (test use, small inputs)
};

Slices slice(const WeightedGraph& wg);
CopyOrder order_copies(const WeightedGraph& wg, const Slices& slices,
                       TieBreak tie = TieBreak::Stable, std::uint64_t seed = 0);
EliminationScheme order_edges(const WeightedGraph& wg, const Slices& slices, const CopyOrder& order);

// slice -> order_copies -> order_edges. O(n+m).
EliminationScheme compute_dmees(const WeightedGraph& wg, TieBreak tie = TieBreak::Stable,
                                std::uint64_t seed = 0);

// Checks from scratch that every edge is degree-minimal among the
// minimum-weight edges of the remaining graph. O(m(n+m)); test oracle.
VerifyResult verify_dmees(const WeightedGraph& wg, const EliminationScheme& scheme);

// Scheme file format: one "u v w" line per edge in elimination order,
// '#' comments allowed. Edges are matched against wg by endpoints.
EliminationScheme parse_scheme(const std::string& text, const WeightedGraph& wg);
std::string emit_scheme(const WeightedGraph& wg, const EliminationScheme& scheme);

}  // namespace lvg
