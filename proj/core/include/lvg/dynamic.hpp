#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lvg/bucket_order.hpp"
#include "lvg/dmees.hpp"
#include "lvg/graph.hpp"
#include "lvg/recognizers.hpp"

namespace lvg {

/// Deletion-only dynamic membership for split, threshold and chain graphs.
/// Linear preprocessing; each try_delete runs in O(1) (amortized for the
/// degree-sequence classes) and either commits the deletion or leaves the
/// state unchanged.
class DynRecognizer {
public:
    // none if g is not in the class.
    static std::optional<DynRecognizer> preprocess(ClassId c, const Graph& g);

    // true = edge deleted, class preserved; false = rejected, state kept.
    // Throws if e is unknown or already deleted.
    bool try_delete(int e);

    ClassId class_id() const { return class_; }
    int deleted_count() const { return deleted_count_; }
    bool edge_present(int e) const { return !deleted_[static_cast<size_t>(e)]; }

    // Instrumentation: elementary steps spent inside try_delete, cumulative.
    // Constant per call for chain, amortized constant for split/threshold.
    std::uint64_t work() const { return work_; }

    // Current certifying partition; chain recognizers only.
    ChainPartition chain_snapshot() const;

private:
    DynRecognizer() = default;

    // split/threshold: degree multiset plus the running sums of the
    // degree-sequence characterizations
    struct DegreeState {
        BucketOrder degrees;
        int n = 0;
        long long degree_sum = 0;
        int h = 0;                 // largest k with k-th largest degree >= k-1
        long long top_sum = 0;     // sum of the h largest degrees
        long long slack_sum = 0;   // total Erdos-Gallai slack over k <= h
        std::uint64_t work = 0;
        void unit_decrement(Vertex v);
        void revalidate_h();
        bool split_ok() const;
        bool threshold_ok() const { return slack_sum == 0; }
        int key_desc(int rank) const;  // rank-th largest degree, 1-based
    };

    struct ChainState {
        struct Group {
            char side = 'A';
            int head = -1, tail = -1;
            int size = 0;
            int prev = -1, next = -1;
        };
        std::vector<Group> groups;
        std::vector<int> free_groups;
        int first_group = -1, last_group = -1;
        std::vector<int> vprev, vnext;   // member-list links per vertex
        std::vector<int> group_of;       // -1 = isolated set
        std::vector<Vertex> isolated;

        int alloc_group(char side);
        void insert_group_after(int g, int after);   // after == -1: at front
        void unlink_group(int g);
        void list_remove(int g, Vertex v);
        void list_append(int g, Vertex v);
        void move_to_isolated(Vertex v);
    };

    bool try_delete_degree(Vertex x, Vertex y);
    bool try_delete_chain(Vertex x, Vertex y);

    ClassId class_ = ClassId::Split;
    std::uint64_t work_ = 0;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<char> deleted_;
    int deleted_count_ = 0;
    std::unique_ptr<DegreeState> degree_;
    std::unique_ptr<ChainState> chain_;
};

// Preprocess then delete in scheme order. nullopt = accept-all, otherwise
// the 1-based position of the first rejected edge. Throws if g is not in
// the class or the scheme is not a permutation of its edges.
std::optional<int> replay(ClassId c, const Graph& g, const EliminationScheme& scheme);

}  // namespace lvg
