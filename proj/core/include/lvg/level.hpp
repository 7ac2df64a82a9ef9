#pragma once

#include <optional>

#include "lvg/dmees.hpp"
#include "lvg/dynamic.hpp"
#include "lvg/graph.hpp"
#include "lvg/patterns.hpp"
#include "lvg/recognizers.hpp"

namespace lvg {

struct LevelVerdict {
    bool accepted = false;
    std::optional<int> failing_level;          // smallest level outside the class, re-checkable
    std::optional<int> failing_edge_position;  // 1-based scheme position where replay rejected
    std::optional<PatternWitness> witness;     // oracle path only
};

// Static check, one degree-minimal elimination scheme, one replay. O(n+m).
LevelVerdict recognize_level(const WeightedGraph& wg, ClassId c);

// Recognizes every level graph separately; O(k(n+m)) plus witness search.
// The baseline and the test oracle.
LevelVerdict naive_recognize_level(const WeightedGraph& wg, ClassId c);

// nullopt = every prefix stays in the class; else 1-based first rejection.
std::optional<int> check_scheme(ClassId c, const Graph& g, const EliminationScheme& scheme);

// The computed scheme when the weighted graph is accepted: weight-sorted and
// class-safe in one order. none when rejected.
std::optional<EliminationScheme> sorted_safe_scheme(const WeightedGraph& wg, ClassId c);

}  // namespace lvg
