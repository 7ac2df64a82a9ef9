#include "lvg/dynamic.hpp"

#include <algorithm>
#include <utility>

namespace lvg {

int DynRecognizer::DegreeState::key_desc(int rank) const {
    return degrees.key_at_position(n - rank);
}

// One unit off the degree of v. The sorted multiset loses the unit at the
// last descending slot holding v's old value; the running sums follow.
void DynRecognizer::DegreeState::unit_decrement(Vertex v) {
    int old_value = degrees.key_of(v);
    int p = n - degrees.block_first_of(v);  // descending rank of the changed slot

    // Erdos-Gallai slack: +1 for k in [p, h], -1 for k in [old_value, p-1] cap h
    if (p <= h) slack_sum += h - p + 1;
    int hi = std::min(p - 1, h);
    if (old_value <= hi) slack_sum -= hi - old_value + 1;

    if (p <= h) top_sum -= 1;
    degree_sum -= 1;
    degrees.decrease_key(v);
    revalidate_h();
}

void DynRecognizer::DegreeState::revalidate_h() {
    while (h >= 1 && key_desc(h) < h - 1) {
        ++work;
        // slack at the boundary index collapses to a closed form because all
        // degrees past it are below it
        long long rest = degree_sum - top_sum;
        slack_sum -= static_cast<long long>(h) * (h - 1) + rest - top_sum;
        top_sum -= key_desc(h);
        --h;
    }
}

bool DynRecognizer::DegreeState::split_ok() const {
    return 2 * top_sum == static_cast<long long>(h) * (h - 1) + degree_sum;
}

std::optional<DynRecognizer> DynRecognizer::preprocess(ClassId c, const Graph& g) {
    if (!in_class(c, g)) return std::nullopt;
    DynRecognizer r;
    r.class_ = c;
    r.n_ = g.vertex_count();
    r.edges_ = g.edges();
    r.deleted_.assign(r.edges_.size(), 0);

    if (c == ClassId::Chain) {
        auto cp = chain_partition(g);
        auto state = std::make_unique<ChainState>();
        state->vprev.assign(static_cast<size_t>(r.n_), -1);
        state->vnext.assign(static_cast<size_t>(r.n_), -1);
        state->group_of.assign(static_cast<size_t>(r.n_), -1);
        state->isolated = cp->isolated;
        int prev = -1;
        for (const auto& [a, b] : cp->groups) {
            int ga = state->alloc_group('A');
            state->insert_group_after(ga, prev);
            for (Vertex v : a) state->list_append(ga, v);
            int gb = state->alloc_group('B');
            state->insert_group_after(gb, ga);
            for (Vertex v : b) state->list_append(gb, v);
            prev = gb;
        }
        r.chain_ = std::move(state);
        return r;
    }

    auto state = std::make_unique<DegreeState>();
    state->n = r.n_;
    std::vector<int> keys(static_cast<size_t>(r.n_));
    for (Vertex v = 0; v < r.n_; ++v) keys[static_cast<size_t>(v)] = g.degree(v);
    state->degrees = BucketOrder(keys, 0, std::max(r.n_ - 1, 0));
    state->degree_sum = 0;
    for (int d : keys) state->degree_sum += d;

    state->h = 0;
    state->top_sum = 0;
    for (int k = 1; k <= state->n; ++k) {
        if (state->key_desc(k) >= k - 1) state->h = k;
    }
    for (int k = 1; k <= state->h; ++k) state->top_sum += state->key_desc(k);

    // total Erdos-Gallai slack over k <= h, assembled in two linear passes
    long long quad = 0, min_terms = 0;
    for (int k = 1; k <= state->h; ++k) quad += static_cast<long long>(k) * (k - 1);
    for (int i = 1; i <= state->n; ++i) {
        long long d = state->key_desc(i);
        // sum over k in [1, min(i-1, h)] of min(d_i, k)
        long long cap = std::min<long long>(i - 1, state->h);
        if (cap > 0) {
            if (d >= cap)
                min_terms += cap * (cap + 1) / 2;
            else
                min_terms += d * (d + 1) / 2 + (cap - d) * d;
        }
    }
    long long prefix_sums = 0, running = 0;
    for (int k = 1; k <= state->h; ++k) {
        running += state->key_desc(k);
        prefix_sums += running;
    }
    state->slack_sum = quad + min_terms - prefix_sums;

    r.degree_ = std::move(state);
    return r;
}

bool DynRecognizer::try_delete(int e) {
    if (e < 0 || e >= static_cast<int>(edges_.size()))
        throw std::invalid_argument("unknown edge");
    if (deleted_[static_cast<size_t>(e)]) throw std::invalid_argument("edge already deleted");
    Vertex x = edges_[static_cast<size_t>(e)].u;
    Vertex y = edges_[static_cast<size_t>(e)].v;
    bool accepted = class_ == ClassId::Chain ? try_delete_chain(x, y) : try_delete_degree(x, y);
    if (accepted) {
        deleted_[static_cast<size_t>(e)] = 1;
        ++deleted_count_;
    }
    return accepted;
}

bool DynRecognizer::try_delete_degree(Vertex x, Vertex y) {
    DegreeState& s = *degree_;
    std::uint64_t bucket_before = s.degrees.steps();
    struct Snapshot {
        long long degree_sum, top_sum, slack_sum;
        int h;
    } before{s.degree_sum, s.top_sum, s.slack_sum, s.h};

    s.unit_decrement(x);
    s.unit_decrement(y);
    bool ok = class_ == ClassId::Split ? s.split_ok() : s.threshold_ok();
    if (!ok) {
        s.degrees.increase_key(y);
        s.degrees.increase_key(x);
        s.degree_sum = before.degree_sum;
        s.top_sum = before.top_sum;
        s.slack_sum = before.slack_sum;
        s.h = before.h;
    }
    work_ += s.degrees.steps() - bucket_before + std::exchange(s.work, 0) + 4;
    return ok;
}

int DynRecognizer::ChainState::alloc_group(char side) {
    int g;
    if (!free_groups.empty()) {
        g = free_groups.back();
        free_groups.pop_back();
        groups[static_cast<size_t>(g)] = Group{};
    } else {
        g = static_cast<int>(groups.size());
        groups.push_back(Group{});
    }
    groups[static_cast<size_t>(g)].side = side;
    return g;
}

void DynRecognizer::ChainState::insert_group_after(int g, int after) {
    Group& grp = groups[static_cast<size_t>(g)];
    grp.prev = after;
    grp.next = after == -1 ? first_group : groups[static_cast<size_t>(after)].next;
    if (grp.prev != -1)
        groups[static_cast<size_t>(grp.prev)].next = g;
    else
        first_group = g;
    if (grp.next != -1)
        groups[static_cast<size_t>(grp.next)].prev = g;
    else
        last_group = g;
}

void DynRecognizer::ChainState::unlink_group(int g) {
    Group& grp = groups[static_cast<size_t>(g)];
    if (grp.prev != -1)
        groups[static_cast<size_t>(grp.prev)].next = grp.next;
    else
        first_group = grp.next;
    if (grp.next != -1)
        groups[static_cast<size_t>(grp.next)].prev = grp.prev;
    else
        last_group = grp.prev;
    free_groups.push_back(g);
}

void DynRecognizer::ChainState::list_remove(int g, Vertex v) {
    Group& grp = groups[static_cast<size_t>(g)];
    int p = vprev[static_cast<size_t>(v)], nx = vnext[static_cast<size_t>(v)];
    if (p != -1)
        vnext[static_cast<size_t>(p)] = nx;
    else
        grp.head = nx;
    if (nx != -1)
        vprev[static_cast<size_t>(nx)] = p;
    else
        grp.tail = p;
    vprev[static_cast<size_t>(v)] = vnext[static_cast<size_t>(v)] = -1;
    group_of[static_cast<size_t>(v)] = -1;
    --grp.size;
}

void DynRecognizer::ChainState::list_append(int g, Vertex v) {
    Group& grp = groups[static_cast<size_t>(g)];
    vprev[static_cast<size_t>(v)] = grp.tail;
    vnext[static_cast<size_t>(v)] = -1;
    if (grp.tail != -1)
        vnext[static_cast<size_t>(grp.tail)] = v;
    else
        grp.head = v;
    grp.tail = v;
    group_of[static_cast<size_t>(v)] = g;
    ++grp.size;
}

void DynRecognizer::ChainState::move_to_isolated(Vertex v) {
    isolated.push_back(v);
    group_of[static_cast<size_t>(v)] = -1;
}

bool DynRecognizer::try_delete_chain(Vertex x, Vertex y) {
    ChainState& s = *chain_;
    work_ += 8;  // bounded number of list splices below
    int gx = s.group_of[static_cast<size_t>(x)];
    int gy = s.group_of[static_cast<size_t>(y)];
    if (s.groups[static_cast<size_t>(gx)].side == 'B') {
        std::swap(x, y);
        std::swap(gx, gy);
    }
    // chain-safe iff the A-group of x immediately precedes the B-group of y
    if (s.groups[static_cast<size_t>(gx)].next != gy) return false;

    s.list_remove(gx, x);
    s.list_remove(gy, y);
    bool a_emptied = s.groups[static_cast<size_t>(gx)].size == 0;
    bool b_emptied = s.groups[static_cast<size_t>(gy)].size == 0;

    if (a_emptied) {
        int prev_b = s.groups[static_cast<size_t>(gx)].prev;
        s.unlink_group(gx);
        if (prev_b != -1)
            s.list_append(prev_b, y);
        else
            s.move_to_isolated(y);
    } else {
        int nb = s.alloc_group('B');
        s.insert_group_after(nb, gx);
        s.list_append(nb, y);
    }

    if (b_emptied) {
        int next_a = s.groups[static_cast<size_t>(gy)].next;
        s.unlink_group(gy);
        if (next_a != -1)
            s.list_append(next_a, x);
        else
            s.move_to_isolated(x);
    } else {
        int na = s.alloc_group('A');
        s.insert_group_after(na, s.groups[static_cast<size_t>(gy)].prev);
        s.list_append(na, x);
    }
    return true;
}

ChainPartition DynRecognizer::chain_snapshot() const {
    if (!chain_) throw std::logic_error("not a chain recognizer");
    ChainPartition cp;
    cp.isolated = chain_->isolated;
    std::sort(cp.isolated.begin(), cp.isolated.end());
    for (int g = chain_->first_group; g != -1;) {
        const auto& ga = chain_->groups[static_cast<size_t>(g)];
        const auto& gb = chain_->groups[static_cast<size_t>(ga.next)];
        std::vector<Vertex> a, b;
        for (int v = ga.head; v != -1; v = chain_->vnext[static_cast<size_t>(v)]) a.push_back(v);
        for (int v = gb.head; v != -1; v = chain_->vnext[static_cast<size_t>(v)]) b.push_back(v);
        cp.groups.emplace_back(std::move(a), std::move(b));
        g = gb.next;
    }
    return cp;
}

std::optional<int> replay(ClassId c, const Graph& g, const EliminationScheme& scheme) {
    if (static_cast<int>(scheme.order.size()) != g.edge_count())
        throw std::invalid_argument("scheme is not a permutation of the edges");
    auto rec = DynRecognizer::preprocess(c, g);
    if (!rec) throw std::invalid_argument(std::string("graph is not ") + class_name(c));
    for (size_t i = 0; i < scheme.order.size(); ++i)
        if (!rec->try_delete(scheme.order[i])) return static_cast<int>(i) + 1;
    return std::nullopt;
}

}  // namespace lvg
