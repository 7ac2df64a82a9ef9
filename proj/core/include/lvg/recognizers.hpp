#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lvg/graph.hpp"

namespace lvg {

enum class ClassId { Split, Threshold, Chain };

const char* class_name(ClassId c);
std::optional<ClassId> class_from_name(const std::string& name);

struct SplitPartition {
    std::vector<Vertex> clique;
    std::vector<Vertex> independent;
};

/// Ordered groups (A_1,B_1,...,A_k,B_k) plus the isolated vertices. An edge
/// xy exists iff x lies in some A_i and y in some B_j with i <= j.
struct ChainPartition {
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> groups;
    std::vector<Vertex> isolated;
};

// Degree-sequence split test; O(n+m). The returned clique is the canonical
// top-h by (degree, then higher vertex id).
std::optional<SplitPartition> is_split(const Graph& g);

// Iterated removal of isolated or dominating vertices; O(n+m).
bool is_threshold(const Graph& g);

// Builds a chain partition by repeatedly peeling the dominating B-side
// vertices and the A-side vertices they isolate; O(n+m). none = not chain.
std::optional<ChainPartition> chain_partition(const Graph& g);

// The defining predicate of a chain partition, checked structurally. O(n^2).
bool chain_partition_valid(const Graph& g, const ChainPartition& cp);

bool in_class(ClassId c, const Graph& g);

// Lemma-based safety predicate: true iff deleting edge e keeps g in the
// class. Role checks are local to the edge's endpoints. Requires g in class.
bool safe_edge(ClassId c, const Graph& g, int e);

// Deletes e and reruns the static recognizer. Requires g in class.
bool brute_safe(ClassId c, const Graph& g, int e);

}  // namespace lvg
