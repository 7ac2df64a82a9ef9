#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvg/recognizers.hpp"

namespace lvg {

struct DsmReport {
    long long trials = 0;
    long long safe_sets_sampled = 0;
    long long degree_minimal_edges = 0;
    long long neighbor_degree_checks = 0;
    std::vector<std::string> counterexamples;  // expected empty

    bool clean() const { return counterexamples.empty(); }
};

// Per trial: a random class member, a random safe edge set F, and the claim
// that every degree-minimal edge of F is itself safe. Each degree-minimal
// edge additionally gets the neighbor-degree inequality checked against all
// its F-partners. Brute-force regime, n_max small.
DsmReport dsm_property_check(ClassId c, int trials, int n_max, std::uint64_t seed);

}  // namespace lvg
