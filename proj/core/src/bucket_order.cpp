#include "lvg/bucket_order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lvg {

BucketOrder::BucketOrder(std::span<const int> keys, int key_floor, int key_ceiling)
    : floor_(key_floor), ceiling_(key_ceiling) {
    int n = static_cast<int>(keys.size());
    for (int k : keys)
        if (k < floor_ || k > ceiling_) throw std::out_of_range("key outside declared domain");

    key_.assign(keys.begin(), keys.end());
    array_.resize(static_cast<size_t>(n));
    std::iota(array_.begin(), array_.end(), 0);

    unsigned long long range = static_cast<unsigned long long>(ceiling_ - floor_) + 1;
    unsigned long long nlogn =
        static_cast<unsigned long long>(n) * (n > 1 ? std::bit_width(static_cast<unsigned>(n)) : 1);
    if (std::is_sorted(key_.begin(), key_.end())) {
        // pre-sorted input keeps construction linear in n alone
    } else if (static_cast<unsigned long long>(n) + range <= nlogn || n <= 2) {
        // counting sort, stable in object id
        std::vector<int> count(range + 1, 0);
        for (int k : key_) ++count[static_cast<size_t>(k - floor_)];
        int acc = 0;
        for (size_t i = 0; i < count.size(); ++i) {
            int c = count[i];
            count[i] = acc;
            acc += c;
        }
        for (int obj = 0; obj < n; ++obj)
            array_[static_cast<size_t>(count[static_cast<size_t>(key_[static_cast<size_t>(obj)] -
                                                                 floor_)]++)] = obj;
    } else {
        std::stable_sort(array_.begin(), array_.end(),
                         [&](int a, int b) { return key_[static_cast<size_t>(a)] < key_[static_cast<size_t>(b)]; });
    }

    pos_.resize(static_cast<size_t>(n));
    block_of_.assign(static_cast<size_t>(n), -1);
    alive_.assign(static_cast<size_t>(n), 1);
    live_ = n;
    for (int p = 0; p < n; ++p) pos_[static_cast<size_t>(array_[static_cast<size_t>(p)])] = p;

    int prev = -1;
    for (int p = 0; p < n;) {
        int k = key_[static_cast<size_t>(array_[static_cast<size_t>(p)])];
        int q = p;
        while (q < n && key_[static_cast<size_t>(array_[static_cast<size_t>(q)])] == k) ++q;
        int b = new_block(k, p, q - 1, prev, -1);
        if (prev != -1)
            blocks_[static_cast<size_t>(prev)].next = b;
        else
            head_ = b;
        for (int i = p; i < q; ++i) block_of_[static_cast<size_t>(array_[static_cast<size_t>(i)])] = b;
        prev = b;
        p = q;
    }
    tail_ = prev;
}

int BucketOrder::new_block(int key, int first, int last, int prev, int next) {
    ++steps_;
    int b;
    if (!free_list_.empty()) {
        b = free_list_.back();
        free_list_.pop_back();
        blocks_[static_cast<size_t>(b)] = {key, first, last, prev, next};
    } else {
        b = static_cast<int>(blocks_.size());
        blocks_.push_back({key, first, last, prev, next});
    }
    return b;
}

void BucketOrder::free_block(int b) {
    ++steps_;
    free_list_.push_back(b);
}

void BucketOrder::unlink_block(int b) {
    ++steps_;
    const Block& blk = blocks_[static_cast<size_t>(b)];
    if (blk.prev != -1)
        blocks_[static_cast<size_t>(blk.prev)].next = blk.next;
    else
        head_ = blk.next;
    if (blk.next != -1)
        blocks_[static_cast<size_t>(blk.next)].prev = blk.prev;
    else
        tail_ = blk.prev;
    free_block(b);
}

void BucketOrder::swap_positions(int p, int q) {
    ++steps_;
    if (p == q) return;
    int a = array_[static_cast<size_t>(p)], b = array_[static_cast<size_t>(q)];
    std::swap(array_[static_cast<size_t>(p)], array_[static_cast<size_t>(q)]);
    pos_[static_cast<size_t>(a)] = q;
    pos_[static_cast<size_t>(b)] = p;
}

void BucketOrder::check_live(int obj) const {
    if (obj < 0 || obj >= static_cast<int>(alive_.size()) || !alive_[static_cast<size_t>(obj)])
        throw std::invalid_argument("object not live");
}

void BucketOrder::decrease_key(int obj) {
    check_live(obj);
    int j = key_[static_cast<size_t>(obj)];
    if (j - 1 < floor_) throw std::out_of_range("decrease below key domain");
    int b = block_of_[static_cast<size_t>(obj)];
    ++steps_;

    // new_block may grow the arena, so blocks_ is only addressed by handle
    swap_positions(pos_[static_cast<size_t>(obj)], blocks_[static_cast<size_t>(b)].first);
    int at = blocks_[static_cast<size_t>(b)].first;
    int pred = blocks_[static_cast<size_t>(b)].prev;
    if (pred != -1 && blocks_[static_cast<size_t>(pred)].key == j - 1) {
        blocks_[static_cast<size_t>(pred)].last = at;
        block_of_[static_cast<size_t>(obj)] = pred;
    } else {
        int nb = new_block(j - 1, at, at, pred, b);
        if (pred != -1)
            blocks_[static_cast<size_t>(pred)].next = nb;
        else
            head_ = nb;
        blocks_[static_cast<size_t>(b)].prev = nb;
        block_of_[static_cast<size_t>(obj)] = nb;
    }
    key_[static_cast<size_t>(obj)] = j - 1;
    blocks_[static_cast<size_t>(b)].first = at + 1;
    if (blocks_[static_cast<size_t>(b)].first > blocks_[static_cast<size_t>(b)].last)
        unlink_block(b);
}

void BucketOrder::increase_key(int obj) {
    check_live(obj);
    int j = key_[static_cast<size_t>(obj)];
    if (j + 1 > ceiling_) throw std::out_of_range("increase above key domain");
    int b = block_of_[static_cast<size_t>(obj)];
    ++steps_;

    swap_positions(pos_[static_cast<size_t>(obj)], blocks_[static_cast<size_t>(b)].last);
    int at = blocks_[static_cast<size_t>(b)].last;
    int succ = blocks_[static_cast<size_t>(b)].next;
    if (succ != -1 && blocks_[static_cast<size_t>(succ)].key == j + 1) {
        blocks_[static_cast<size_t>(succ)].first = at;
        block_of_[static_cast<size_t>(obj)] = succ;
    } else {
        int nb = new_block(j + 1, at, at, b, succ);
        if (succ != -1)
            blocks_[static_cast<size_t>(succ)].prev = nb;
        else
            tail_ = nb;
        blocks_[static_cast<size_t>(b)].next = nb;
        block_of_[static_cast<size_t>(obj)] = nb;
    }
    key_[static_cast<size_t>(obj)] = j + 1;
    blocks_[static_cast<size_t>(b)].last = at - 1;
    if (blocks_[static_cast<size_t>(b)].first > blocks_[static_cast<size_t>(b)].last)
        unlink_block(b);
}

int BucketOrder::delete_min() {
    if (empty()) throw std::out_of_range("delete_min on empty structure");
    return remove_from_min_block(blocks_[static_cast<size_t>(head_)].first);
}

int BucketOrder::remove_from_min_block(int p) {
    if (empty()) throw std::out_of_range("remove on empty structure");
    Block& blk = blocks_[static_cast<size_t>(head_)];
    if (p < blk.first || p > blk.last) throw std::out_of_range("position outside minimum block");
    swap_positions(p, blk.first);
    int obj = array_[static_cast<size_t>(blk.first)];
    alive_[static_cast<size_t>(obj)] = 0;
    block_of_[static_cast<size_t>(obj)] = -1;
    --live_;
    ++steps_;
    blk.first += 1;
    if (blk.first > blk.last) unlink_block(head_);
    return obj;
}

int BucketOrder::delete_max() {
    if (empty()) throw std::out_of_range("delete_max on empty structure");
    Block& blk = blocks_[static_cast<size_t>(tail_)];
    int obj = array_[static_cast<size_t>(blk.last)];
    alive_[static_cast<size_t>(obj)] = 0;
    block_of_[static_cast<size_t>(obj)] = -1;
    --live_;
    ++steps_;
    blk.last -= 1;
    if (blk.first > blk.last) unlink_block(tail_);
    return obj;
}

int BucketOrder::min_key() const {
    if (empty()) throw std::out_of_range("min_key on empty structure");
    return blocks_[static_cast<size_t>(head_)].key;
}

int BucketOrder::max_key() const {
    if (empty()) throw std::out_of_range("max_key on empty structure");
    return blocks_[static_cast<size_t>(tail_)].key;
}

int BucketOrder::min_block_first() const {
    if (empty()) throw std::out_of_range("empty structure");
    return blocks_[static_cast<size_t>(head_)].first;
}

int BucketOrder::min_block_last() const {
    if (empty()) throw std::out_of_range("empty structure");
    return blocks_[static_cast<size_t>(head_)].last;
}

std::vector<int> BucketOrder::live_order() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(live_));
    for (int b = head_; b != -1; b = blocks_[static_cast<size_t>(b)].next) {
        const Block& blk = blocks_[static_cast<size_t>(b)];
        for (int p = blk.first; p <= blk.last; ++p) out.push_back(array_[static_cast<size_t>(p)]);
    }
    return out;
}

std::string BucketOrder::dump() const {
    std::ostringstream out;
    for (int b = head_; b != -1; b = blocks_[static_cast<size_t>(b)].next) {
        const Block& blk = blocks_[static_cast<size_t>(b)];
        out << blk.key << ": [";
        for (int p = blk.first; p <= blk.last; ++p) {
            if (p > blk.first) out << ' ';
            out << array_[static_cast<size_t>(p)];
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace lvg
