#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lvg/bench.hpp"
#include "lvg/dmees.hpp"
#include "lvg/dsm_check.hpp"
#include "lvg/generators.hpp"
#include "lvg/level.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

lvg::ClassId parse_class(const std::string& name) {
    auto c = lvg::class_from_name(name);
    if (!c) throw CLI::ValidationError("--class", "expected split, threshold or chain");
    return *c;
}

// "2^a..2^b" or a comma list of edge counts; list entries may use 2^e too
std::vector<long long> parse_sizes(const std::string& text) {
    auto parse_one = [](const std::string& tok) -> long long {
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            long long base = std::stoll(tok.substr(0, caret));
            int exp = std::stoi(tok.substr(caret + 1));
            long long value = 1;
            for (int i = 0; i < exp; ++i) value *= base;
            return value;
        }
        return std::stoll(tok);
    };
    std::vector<long long> sizes;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        auto caret_lo = lo.find('^'), caret_hi = hi.find('^');
        if (caret_lo == std::string::npos || caret_hi == std::string::npos ||
            lo.substr(0, caret_lo) != hi.substr(0, caret_hi))
            throw CLI::ValidationError("--sizes", "expected 2^a..2^b");
        int a = std::stoi(lo.substr(caret_lo + 1));
        int b = std::stoi(hi.substr(caret_hi + 1));
        for (int e = a; e <= b; ++e) sizes.push_back(parse_one(lo.substr(0, caret_lo + 1) + std::to_string(e)));
        return sizes;
    }
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) sizes.push_back(parse_one(tok));
    if (sizes.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
    return sizes;
}

int cmd_recognize(const std::string& file, const std::string& cls, bool naive, bool normalize) {
    lvg::WeightedGraph wg = lvg::parse_weighted(read_file(file), normalize);
    lvg::ClassId c = parse_class(cls);
    lvg::LevelVerdict v = naive ? lvg::naive_recognize_level(wg, c) : lvg::recognize_level(wg, c);
    if (v.accepted) {
        std::cout << "ACCEPT\n";
        return 0;
    }
    std::cout << "REJECT";
    if (v.failing_level) std::cout << " level=" << *v.failing_level;
    std::cout << '\n';
    return 1;
}

int cmd_scheme(const std::string& file, bool normalize) {
    lvg::WeightedGraph wg = lvg::parse_weighted(read_file(file), normalize);
    std::cout << lvg::emit_scheme(wg, lvg::compute_dmees(wg));
    return 0;
}

int cmd_check_scheme(const std::string& graph_file, const std::string& scheme_file,
                     const std::string& cls) {
    lvg::WeightedGraph wg = lvg::parse_weighted(read_file(graph_file));
    lvg::EliminationScheme scheme = lvg::parse_scheme(read_file(scheme_file), wg);
    auto rejected = lvg::check_scheme(parse_class(cls), wg.graph, scheme);
    if (!rejected) {
        std::cout << "SAFE\n";
        return 0;
    }
    std::cout << "UNSAFE at=" << *rejected << '\n';
    return 1;
}

int cmd_gen(const std::string& cls, int n, int k, std::uint64_t seed, bool perturb) {
    lvg::GenSpec spec;
    spec.cls = parse_class(cls);
    spec.n = n;
    spec.k = k;
    spec.seed = seed;
    spec.perturb = perturb;
    std::cout << lvg::emit_weighted(lvg::gen_level_instance(spec));
    return 0;
}

int cmd_props(const std::string& cls, int trials, int nmax, std::uint64_t seed) {
    lvg::DsmReport report = lvg::dsm_property_check(parse_class(cls), trials, nmax, seed);
    std::cout << "trials\t" << report.trials << "\nsafe_sets\t" << report.safe_sets_sampled
              << "\ndegree_minimal_edges\t" << report.degree_minimal_edges
              << "\nneighbor_degree_checks\t" << report.neighbor_degree_checks
              << "\ncounterexamples\t" << report.counterexamples.size() << '\n';
    for (const std::string& cx : report.counterexamples) std::cout << cx << '\n';
    return report.clean() ? 0 : 1;
}

int cmd_bench(const std::string& cls, const std::string& sizes, int repeats, int k,
              std::uint64_t seed) {
    lvg::BenchConfig config;
    config.sizes = parse_sizes(sizes);
    config.repeats = repeats;
    config.k = k;
    config.seed = seed;
    std::cout << "m\tk\tpipeline_ms\tnaive_ms\tratio\n";
    for (const lvg::BenchRow& row : lvg::run_bench(parse_class(cls), config)) {
        std::cout << row.m << '\t' << row.k << '\t' << row.pipeline_ms << '\t';
        if (row.naive_ms >= 0)
            std::cout << row.naive_ms << '\t' << row.ratio << '\n';
        else
            std::cout << "-\t-\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"level graph class recognition"};
    app.require_subcommand(1);

    std::string file, graph_file, scheme_file, cls, sizes = "2^10..2^14";
    bool naive = false, normalize = false, perturb = false;
    int n = 10, k = 3, trials = 1000, nmax = 9, repeats = 3, bench_k = 64;
    std::uint64_t seed = 1;

    auto* recognize = app.add_subcommand("recognize", "decide level-class membership");
    recognize->add_option("--class", cls, "split|threshold|chain")->required();
    recognize->add_flag("--naive", naive, "per-level baseline instead of the pipeline");
    recognize->add_flag("--normalize", normalize, "densely remap non-surjective weights");
    recognize->add_option("file", file, "weighted graph file")->required();

    auto* scheme = app.add_subcommand("scheme", "print a degree-minimal elimination scheme");
    scheme->add_flag("--normalize", normalize, "densely remap non-surjective weights");
    scheme->add_option("file", file, "weighted graph file")->required();

    auto* check = app.add_subcommand("check-scheme", "replay a scheme through the dynamic recognizer");
    check->add_option("--class", cls, "split|threshold|chain")->required();
    check->add_option("graph", graph_file, "weighted graph file")->required();
    check->add_option("scheme", scheme_file, "scheme file")->required();

    auto* gen = app.add_subcommand("gen", "generate a weighted instance");
    gen->add_option("--class", cls, "split|threshold|chain")->required();
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--k", k, "target weight count")->required();
    gen->add_option("--seed", seed, "rng seed")->required();
    gen->add_flag("--perturb", perturb, "swap two weights of a yes-instance");

    auto* props = app.add_subcommand("props", "degree sandwich monotonicity property suite");
    props->add_option("--class", cls, "split|threshold|chain")->required();
    props->add_option("--trials", trials, "trial count")->required();
    props->add_option("--nmax", nmax, "maximum vertex count")->required();
    props->add_option("--seed", seed, "rng seed")->required();

    auto* bench = app.add_subcommand("bench", "pipeline vs per-level baseline timings");
    bench->add_option("--class", cls, "split|threshold|chain")->required();
    bench->add_option("--sizes", sizes, "2^a..2^b or comma list of edge counts")->required();
    bench->add_option("--repeats", repeats, "timing repeats per row");
    bench->add_option("--k", bench_k, "weight count of generated instances");
    bench->add_option("--seed", seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (recognize->parsed()) return cmd_recognize(file, cls, naive, normalize);
        if (scheme->parsed()) return cmd_scheme(file, normalize);
        if (check->parsed()) return cmd_check_scheme(graph_file, scheme_file, cls);
        if (gen->parsed()) return cmd_gen(cls, n, k, seed, perturb);
        if (props->parsed()) return cmd_props(cls, trials, nmax, seed);
        if (bench->parsed()) return cmd_bench(cls, sizes, repeats, bench_k, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
