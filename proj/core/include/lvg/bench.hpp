#pragma once

#include <cstdint>
#include <vector>

#include "lvg/recognizers.hpp"

namespace lvg {

struct BenchRow {
    long long m = 0;
    int k = 0;
    double pipeline_ms = 0.0;
    double naive_ms = -1.0;  // negative when skipped
    double ratio = -1.0;     // naive / pipeline
};

struct BenchConfig {
    std::vector<long long> sizes;  // target edge counts, ascending
    int repeats = 3;
    int k = 64;
    std::uint64_t seed = 1;
    long long naive_cutoff = 1LL << 20;  // skip the baseline above this m
};

// Times recognize_level and the per-level baseline on generated
// yes-instances; medians of `repeats` runs, generation excluded.
std::vector<BenchRow> run_bench(ClassId c, const BenchConfig& config);

}  // namespace lvg
