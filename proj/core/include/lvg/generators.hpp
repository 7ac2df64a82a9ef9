#pragma once

#include <cstdint>
#include <vector>

#include "lvg/graph.hpp"
#include "lvg/recognizers.hpp"

namespace lvg {

struct GenSpec {
    ClassId cls = ClassId::Split;
    int n = 1;
    int k = 1;
    std::uint64_t seed = 0;
    bool perturb = false;  // one random weight swap on top of a yes-instance
};

// Random member of the class: random split partition with random cross
// edges, random isolated/dominating creation sequence, or a random staircase.
Graph gen_class_graph(ClassId c, int n, std::uint64_t seed);

// Weighted instance. Without perturb the result is level-class by
// construction; with perturb the verdict is unknown and callers consult the
// naive oracle. Weights are dense, so the realized k may be below target.
WeightedGraph gen_level_instance(const GenSpec& spec);

// Arbitrary G(n, p) with uniform dense weights; no class guarantee.
WeightedGraph gen_random_weighted(int n, double edge_prob, int max_k, std::uint64_t seed);

// Yes-instance sized to roughly target_edges, for scaling runs. All k weight
// values are realized whenever the instance is large enough to carry them.
WeightedGraph gen_scaled_yes_instance(ClassId c, long long target_edges, int k,
                                      std::uint64_t seed);

}  // namespace lvg
