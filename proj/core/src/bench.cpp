#include "lvg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "lvg/generators.hpp"
#include "lvg/level.hpp"

namespace lvg {

namespace {

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

template <typename F>
double time_ms(int repeats, F&& run) {
    std::vector<double> times;
    times.reserve(static_cast<size_t>(repeats));
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        run();
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return median(std::move(times));
}

}  // namespace

std::vector<BenchRow> run_bench(ClassId c, const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (size_t i = 0; i < config.sizes.size(); ++i) {
        long long target = config.sizes[i];
        WeightedGraph wg =
            gen_scaled_yes_instance(c, target, config.k, config.seed + static_cast<std::uint64_t>(i));
        BenchRow row;
        row.m = wg.graph.edge_count();
        row.k = wg.k;
        bool accepted = true;
        row.pipeline_ms = time_ms(config.repeats, [&] {
            accepted = recognize_level(wg, c).accepted && accepted;
        });
        if (!accepted) throw std::logic_error("generated yes-instance was rejected");
        if (row.m <= config.naive_cutoff) {
            row.naive_ms = time_ms(config.repeats, [&] {
                accepted = naive_recognize_level(wg, c).accepted && accepted;
            });
            if (!accepted) throw std::logic_error("generated yes-instance was rejected");
            row.ratio = row.pipeline_ms > 0 ? row.naive_ms / row.pipeline_ms : -1.0;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lvg
