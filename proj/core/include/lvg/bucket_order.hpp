#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lvg {

/// Array of objects kept sorted non-decreasingly by integer key, partitioned
/// into contiguous equal-key blocks linked in a doubly linked list. Key +-1,
/// min/max deletion and removal of any member of the minimum block are O(1).
///
/// Objects are dense ids 0..n-1. Keys live in a caller-declared closed
/// interval; stepping outside it throws. Blocks live in a free-listed arena
/// addressed by integer handles. Within a block the order of objects is
/// unspecified and changes under updates.
class BucketOrder {
public:
    BucketOrder() = default;
    // Build from keys[obj]; counting sort when n + range <= n log n.
    BucketOrder(std::span<const int> keys, int key_floor, int key_ceiling);

    int size() const { return live_; }
    bool empty() const { return live_ == 0; }
    bool contains(int obj) const { return alive_[static_cast<size_t>(obj)]; }
    int key_of(int obj) const { return key_[static_cast<size_t>(obj)]; }

    void decrease_key(int obj);
    void increase_key(int obj);

    int delete_min();
    int delete_max();

    int min_key() const;
    int max_key() const;

    // Window onto the minimum block, for callers that pick a specific member.
    int min_block_first() const;
    int min_block_last() const;
    int object_at(int pos) const { return array_[static_cast<size_t>(pos)]; }
    int key_at_position(int pos) const { return key_[static_cast<size_t>(object_at(pos))]; }
    int position_of(int obj) const { return pos_[static_cast<size_t>(obj)]; }
    // First array position of the block currently holding obj.
    int block_first_of(int obj) const {
        return blocks_[static_cast<size_t>(block_of_[static_cast<size_t>(obj)])].first;
    }
    // Removes the member at position pos of the minimum block.
    int remove_from_min_block(int pos);

    // One line per block: "key: [objects]".
    std::string dump() const;

    // Live objects in array order; test support.
    std::vector<int> live_order() const;

    // Instrumentation: elementary array/block touches, cumulative.
    std::uint64_t steps() const { return steps_; }

private:
    struct Block {
        int key = 0;
        int first = 0;
        int last = 0;
        int prev = -1;
        int next = -1;
    };

    int new_block(int key, int first, int last, int prev, int next);
    void free_block(int b);
    void unlink_block(int b);
    void swap_positions(int p, int q);
    void check_live(int obj) const;

    std::vector<int> array_;     // position -> object (stale outside live blocks)
    std::vector<int> pos_;       // object -> position
    std::vector<int> block_of_;  // object -> block handle
    std::vector<int> key_;       // object -> key
    std::vector<char> alive_;
    std::vector<Block> blocks_;
    std::vector<int> free_list_;
    int head_ = -1;
    int tail_ = -1;
    int live_ = 0;
    int floor_ = 0;
    int ceiling_ = 0;
    std::uint64_t steps_ = 0;
};

}  // namespace lvg
