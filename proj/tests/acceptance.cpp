// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lvg/bench.hpp"
#include "lvg/bucket_order.hpp"
#include "lvg/dmees.hpp"
#include "lvg/dsm_check.hpp"
#include "lvg/dynamic.hpp"
#include "lvg/generators.hpp"
#include "lvg/level.hpp"

using namespace lvg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " — " << detail
              << std::endl;
    if (!pass) ++failures;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixture_path() { return std::string(LVG_FIXTURE_DIR) + "/levels3_17.wg"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string run_tool(const std::string& args) {
    std::string cmd = std::string(LVG_TOOL_DIR) + "/lvg " + args + " 2>/dev/null";
    std::array<char, 4096> chunk{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    size_t got;
    while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) out.append(chunk.data(), got);
    pclose(pipe);
    return out;
}

const std::vector<Pattern> kSplitSet = {Pattern::TwoK2, Pattern::C4, Pattern::C5};
const std::vector<Pattern> kThresholdSet = {Pattern::TwoK2, Pattern::P4, Pattern::C4};

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Incidence& inc : g.neighbors(v)) {
                if (color[static_cast<size_t>(inc.to)] == -1) {
                    color[static_cast<size_t>(inc.to)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(inc.to);
                } else if (color[static_cast<size_t>(inc.to)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// --- criterion 1: golden fixture -----------------------------------------

void criterion1() {
    const std::vector<std::string> golden = {
        "1 5 1", "1 3 1", "1 4 1", "2 5 1", "3 5 1", "4 5 1", "5 6 2", "4 7 2", "3 7 2",
        "2 4 2", "1 2 3", "1 6 3", "4 6 3", "3 4 3", "3 6 3", "2 6 3", "2 3 3"};
    std::string text = read_file(fixture_path());

    auto start = Clock::now();
    WeightedGraph wg = parse_weighted(text);
    Slices s = slice(wg);
    EliminationScheme scheme = compute_dmees(wg);
    VerifyResult vr = verify_dmees(wg, scheme);
    double elapsed = ms_since(start);

    using Table = std::vector<std::pair<Vertex, int>>;
    auto level_table = [&](int level) {
        Table t;
        for (int c : s.level_copies[static_cast<size_t>(level)])
            t.emplace_back(s.copies[static_cast<size_t>(c)].vertex,
                           s.copies[static_cast<size_t>(c)].level_degree);
        std::sort(t.begin(), t.end());
        return t;
    };
    bool degrees_ok =
        level_table(1) == Table{{0, 5}, {1, 5}, {2, 6}, {3, 6}, {4, 5}} &&
        level_table(2) == Table{{1, 4}, {2, 4}, {3, 4}, {4, 1}, {5, 5}, {6, 2}} &&
        level_table(3) == Table{{0, 2}, {1, 3}, {2, 3}, {3, 2}, {5, 4}};

    std::vector<std::string> lines;
    std::istringstream emitted(emit_scheme(wg, scheme));
    std::string line;
    while (std::getline(emitted, line)) lines.push_back(line);

    std::vector<std::string> cli_lines;
    std::istringstream cli(run_tool("scheme " + fixture_path()));
    while (std::getline(cli, line)) cli_lines.push_back(line);

    bool pass = degrees_ok && lines == golden && cli_lines == golden && vr.ok && elapsed < 10.0;
    std::ostringstream detail;
    detail << "degree table " << (degrees_ok ? "exact" : "WRONG") << ", scheme "
           << (lines == golden ? "exact" : "WRONG") << ", cli "
           << (cli_lines == golden ? "exact" : "WRONG") << ", verifier "
           << (vr.ok ? "accepts" : "rejects") << ", " << elapsed << " ms";
    report(1, pass, detail.str());
}

// --- criterion 2: pipeline vs per-level oracle ----------------------------

void criterion2() {
    auto start = Clock::now();
    long long checked = 0, discrepancies = 0;
    for (ClassId c : {ClassId::Split, ClassId::Threshold, ClassId::Chain}) {
        std::mt19937_64 rng(1000 + static_cast<int>(c));
        for (int trial = 0; trial < 10000; ++trial) {
            WeightedGraph wg;
            int n = 2 + static_cast<int>(rng() % 8);
            int k = 1 + static_cast<int>(rng() % 6);
            switch (trial % 3) {
                case 0:
                    wg = gen_random_weighted(n, 0.15 + 0.15 * (trial % 5), k, rng());
                    break;
                case 1:
                    wg = gen_level_instance({c, n, k, rng(), false});
                    break;
                default:
                    wg = gen_level_instance({c, n, k, rng(), true});
                    break;
            }
            LevelVerdict fast = recognize_level(wg, c);
            LevelVerdict slow = naive_recognize_level(wg, c);
            ++checked;
            if (fast.accepted != slow.accepted) {
                ++discrepancies;
                continue;
            }
            if (!fast.accepted) {
                if (!fast.failing_level || in_class(c, level_graph(wg, *fast.failing_level)))
                    ++discrepancies;
            }
        }
    }
    double elapsed = ms_since(start);
    bool pass = discrepancies == 0 && elapsed < 60000.0;
    std::ostringstream detail;
    detail << checked << " instances, " << discrepancies << " discrepancies, " << elapsed / 1000.0
           << " s";
    report(2, pass, detail.str());
}

// --- criterion 3: safe-edge lemmas ----------------------------------------

void criterion3() {
    long long members = 0, edges = 0, discrepancies = 0;
    for (ClassId c : {ClassId::Split, ClassId::Threshold, ClassId::Chain}) {
        std::mt19937_64 rng(2000 + static_cast<int>(c));
        for (int trial = 0; trial < 2000; ++trial) {
            Graph g = gen_class_graph(c, 2 + static_cast<int>(rng() % 7), rng());
            ++members;
            for (int e = 0; e < g.edge_count(); ++e) {
                ++edges;
                if (safe_edge(c, g, e) != brute_safe(c, g, e)) ++discrepancies;
            }
        }
    }
    std::ostringstream detail;
    detail << members << " members, " << edges << " edges, " << discrepancies << " discrepancies";
    report(3, discrepancies == 0, detail.str());
}

// --- criterion 4: degree sandwich monotonicity ----------------------------

void criterion4() {
    long long counterexamples = 0, checked = 0, neighbor_checks = 0;
    for (ClassId c : {ClassId::Split, ClassId::Threshold, ClassId::Chain}) {
        DsmReport report_c = dsm_property_check(c, 10000, 9, 3000 + static_cast<int>(c));
        counterexamples += static_cast<long long>(report_c.counterexamples.size());
        checked += report_c.degree_minimal_edges;
        neighbor_checks += report_c.neighbor_degree_checks;
        for (size_t i = 0; i < report_c.counterexamples.size() && i < 3; ++i)
            std::cerr << class_name(c) << ": " << report_c.counterexamples[i] << '\n';
    }
    std::ostringstream detail;
    detail << "30000 trials, " << checked << " degree-minimal edges, " << neighbor_checks
           << " neighbor-degree checks, " << counterexamples << " counterexamples";
    report(4, counterexamples == 0, detail.str());
}

// --- criterion 5: dynamic vs brute ----------------------------------------

void criterion5() {
    long long deletions = 0, discrepancies = 0, partition_faults = 0;
    for (ClassId c : {ClassId::Split, ClassId::Threshold, ClassId::Chain}) {
        std::mt19937_64 rng(4000 + static_cast<int>(c));
        long long per_class = 0;
        while (per_class < 10000) {
            Graph g = gen_class_graph(c, 2 + static_cast<int>(rng() % 8), rng());
            auto rec = DynRecognizer::preprocess(c, g);
            if (!rec) {
                ++discrepancies;
                break;
            }
            std::vector<bool> deleted(static_cast<size_t>(g.edge_count()), false);
            int remaining = g.edge_count();
            bool progress = true;
            while (remaining > 0 && progress) {
                progress = false;
                std::vector<int> order;
                for (int e = 0; e < g.edge_count(); ++e)
                    if (!deleted[static_cast<size_t>(e)]) order.push_back(e);
                std::shuffle(order.begin(), order.end(), rng);
                for (int e : order) {
                    std::vector<bool> with = deleted;
                    with[static_cast<size_t>(e)] = true;
                    bool truth = in_class(c, g.without_edges(with));
                    bool got = rec->try_delete(e);
                    ++deletions;
                    ++per_class;
                    if (got != truth) ++discrepancies;
                    if (got) {
                        deleted[static_cast<size_t>(e)] = true;
                        --remaining;
                        progress = true;
                        if (c == ClassId::Chain &&
                            !chain_partition_valid(g.without_edges(deleted), rec->chain_snapshot()))
                            ++partition_faults;
                    }
                }
            }
        }
    }
    std::ostringstream detail;
    detail << deletions << " deletions, " << discrepancies << " discrepancies, "
           << partition_faults << " partition faults";
    report(5, discrepancies == 0 && partition_faults == 0, detail.str());
}

// --- criterion 6: bucket order differential -------------------------------

void criterion6() {
    const int n = 512;
    const int key_max = 128;
    std::mt19937_64 rng(5000);
    std::vector<int> keys(n);
    for (int& k : keys) k = 1 + static_cast<int>(rng() % key_max);
    BucketOrder bo(keys, 0, key_max + 1);
    std::vector<int> ref = keys;
    std::multiset<int> ref_keys(keys.begin(), keys.end());

    auto sorted_now = [&]() {
        auto order = bo.live_order();
        for (size_t i = 1; i < order.size(); ++i)
            if (bo.key_of(order[i - 1]) > bo.key_of(order[i])) return false;
        return true;
    };

    long long ops = 0, faults = 0;
    std::uint64_t worst = 0;
    int live = n;
    while (ops < 100000) {
        if (live == 0) {  // refill to keep the mix going
            for (int obj = 0; obj < n; ++obj) ref[static_cast<size_t>(obj)] = 1 + static_cast<int>(rng() % key_max);
            bo = BucketOrder(ref, 0, key_max + 1);
            ref_keys = std::multiset<int>(ref.begin(), ref.end());
            live = n;
        }
        int kind = static_cast<int>(rng() % 4);
        std::uint64_t before = bo.steps();
        int obj = static_cast<int>(rng() % n);
        switch (kind) {
            case 0:
                if (ref[static_cast<size_t>(obj)] <= 0) continue;
                ref_keys.erase(ref_keys.find(ref[static_cast<size_t>(obj)]));
                ref[static_cast<size_t>(obj)] -= 1;
                ref_keys.insert(ref[static_cast<size_t>(obj)]);
                bo.decrease_key(obj);
                break;
            case 1:
                if (ref[static_cast<size_t>(obj)] < 0 || ref[static_cast<size_t>(obj)] > key_max) continue;
                ref_keys.erase(ref_keys.find(ref[static_cast<size_t>(obj)]));
                ref[static_cast<size_t>(obj)] += 1;
                ref_keys.insert(ref[static_cast<size_t>(obj)]);
                bo.increase_key(obj);
                break;
            case 2: {
                int got = bo.delete_min();
                if (ref[static_cast<size_t>(got)] != *ref_keys.begin()) ++faults;
                ref_keys.erase(ref_keys.begin());
                ref[static_cast<size_t>(got)] = -1;
                --live;
                break;
            }
            default: {
                int got = bo.delete_max();
                if (ref[static_cast<size_t>(got)] != *ref_keys.rbegin()) ++faults;
                ref_keys.erase(std::prev(ref_keys.end()));
                ref[static_cast<size_t>(got)] = -1;
                --live;
                break;
            }
        }
        ++ops;
        worst = std::max(worst, bo.steps() - before);
        if (!ref_keys.empty() &&
            (bo.min_key() != *ref_keys.begin() || bo.max_key() != *ref_keys.rbegin()))
            ++faults;
        if (ops % 101 == 0 && !sorted_now()) ++faults;
    }
    std::ostringstream detail;
    detail << ops << " ops, " << faults << " faults, worst per-op work " << worst << " steps";
    report(6, faults == 0 && worst <= 32, detail.str());
}

// --- criterion 7: scaling vs the naive baseline ---------------------------

void criterion7() {
    auto start = Clock::now();
    std::vector<double> doubling_ratios;
    bool generated_ok = true;
    for (ClassId c : {ClassId::Split, ClassId::Threshold, ClassId::Chain}) {
        BenchConfig config;
        for (int e = 16; e <= 21; ++e) config.sizes.push_back(1LL << e);
        config.repeats = 3;
        config.k = 64;
        config.seed = 6000 + static_cast<std::uint64_t>(c);
        config.naive_cutoff = 0;  // ladder times the pipeline only
        std::vector<BenchRow> rows;
        try {
            rows = run_bench(c, config);
        } catch (const std::exception& e) {
            generated_ok = false;
            std::cerr << "bench: " << e.what() << '\n';
            continue;
        }
        for (size_t i = 1; i < rows.size(); ++i) {
            double size_ratio = static_cast<double>(rows[i].m) / static_cast<double>(rows[i - 1].m);
            double time_ratio = rows[i].pipeline_ms / std::max(rows[i - 1].pipeline_ms, 1e-9);
            // normalize to an exact doubling of the edge count
            doubling_ratios.push_back(time_ratio * (2.0 / size_ratio));
        }
    }
    std::sort(doubling_ratios.begin(), doubling_ratios.end());
    double median_ratio = doubling_ratios.empty()
                              ? 1e9
                              : doubling_ratios[doubling_ratios.size() / 2];

    double worst_gap = 1e9;
    for (ClassId c : {ClassId::Split, ClassId::Threshold, ClassId::Chain}) {
        BenchConfig config;
        config.sizes = {1LL << 18};
        config.repeats = 3;
        config.k = 256;
        config.seed = 6100 + static_cast<std::uint64_t>(c);
        auto rows = run_bench(c, config);
        worst_gap = std::min(worst_gap, rows[0].ratio);
    }
    double elapsed = ms_since(start);
    bool pass = generated_ok && median_ratio <= 2.6 && worst_gap >= 5.0 && elapsed < 300000.0;
    std::ostringstream detail;
    detail << "median per-doubling ratio " << median_ratio << " (<= 2.6), min naive/pipeline gap "
           << worst_gap << "x (>= 5), " << elapsed / 1000.0 << " s";
    report(7, pass, detail.str());
}

// --- criterion 8: forbidden-subgraph characterizations --------------------

void criterion8() {
    long long graphs = 0, discrepancies = 0;
    auto check_one = [&](const Graph& g) {
        ++graphs;
        bool split_deg = is_split(g).has_value();
        bool split_pat = !find_forbidden(g, kSplitSet).has_value();
        if (split_deg != split_pat) ++discrepancies;
        bool thr_peel = is_threshold(g);
        bool thr_pat = !find_forbidden(g, kThresholdSet).has_value();
        if (thr_peel != thr_pat) ++discrepancies;
        bool chain_peel = chain_partition(g).has_value();
        bool chain_pat = is_bipartite(g) && !find_forbidden(g, {Pattern::TwoK2}).has_value();
        if (chain_peel != chain_pat) ++discrepancies;
    };

    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) slots.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1u) edges.push_back({slots[i].first, slots[i].second});
        check_one(Graph::from_edges(6, edges));
    }
    std::mt19937_64 rng(7000);
    for (int trial = 0; trial < 200000; ++trial) {
        unsigned bits = static_cast<unsigned>(rng());
        std::vector<Edge> edges;
        int slot = 0;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v, ++slot)
                if (bits >> slot & 1u) edges.push_back({u, v});
        check_one(Graph::from_edges(7, edges));
    }
    std::ostringstream detail;
    detail << graphs << " graphs (all n=6 plus sampled n=7), " << discrepancies
           << " discrepancies";
    report(8, discrepancies == 0, detail.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
