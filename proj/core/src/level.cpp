#include "lvg/level.hpp"

namespace lvg {

namespace {

std::vector<Pattern> forbidden_set(ClassId c) {
    switch (c) {
        case ClassId::Split: return {Pattern::TwoK2, Pattern::C4, Pattern::C5};
        case ClassId::Threshold: return {Pattern::TwoK2, Pattern::P4, Pattern::C4};
        case ClassId::Chain: return {Pattern::TwoK2};
    }
    return {};
}

// Witness search is exponential-grade; only worth running on small inputs.
constexpr int kWitnessVertexLimit = 100;

}  // namespace

LevelVerdict recognize_level(const WeightedGraph& wg, ClassId c) {
    LevelVerdict verdict;
    auto rec = DynRecognizer::preprocess(c, wg.graph);
    if (!rec) {
        verdict.failing_level = 1;
        return verdict;
    }
    EliminationScheme scheme = compute_dmees(wg);
    for (size_t i = 0; i < scheme.order.size(); ++i) {
        if (!rec->try_delete(scheme.order[i])) {
            verdict.failing_edge_position = static_cast<int>(i) + 1;
            // the rejected edge has minimum weight among what remains, so all
            // lighter levels were certified along the way; the next level up
            // is the failing one, re-verified before reporting
            int candidate = wg.weight[static_cast<size_t>(scheme.order[i])] + 1;
            while (candidate <= wg.k + 1 && in_class(c, level_graph(wg, candidate))) ++candidate;
            verdict.failing_level = candidate <= wg.k + 1 ? std::optional<int>(candidate)
                                                          : std::nullopt;
            return verdict;
        }
    }
    verdict.accepted = true;
    return verdict;
}

LevelVerdict naive_recognize_level(const WeightedGraph& wg, ClassId c) {
    LevelVerdict verdict;
    for (int i = 1; i <= wg.k + 1; ++i) {
        Graph level = level_graph(wg, i);
        if (!in_class(c, level)) {
            verdict.failing_level = i;
            if (level.vertex_count() <= kWitnessVertexLimit)
                verdict.witness = find_forbidden(level, forbidden_set(c));
            return verdict;
        }
    }
    verdict.accepted = true;
    return verdict;
}

std::optional<int> check_scheme(ClassId c, const Graph& g, const EliminationScheme& scheme) {
    return replay(c, g, scheme);
}

std::optional<EliminationScheme> sorted_safe_scheme(const WeightedGraph& wg, ClassId c) {
    auto rec = DynRecognizer::preprocess(c, wg.graph);
    if (!rec) return std::nullopt;
    EliminationScheme scheme = compute_dmees(wg);
    for (size_t i = 0; i < scheme.order.size(); ++i)
        if (!rec->try_delete(scheme.order[i])) return std::nullopt;
    return scheme;
}

}  // namespace lvg
