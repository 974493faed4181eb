#pragma once

#include <deque>
#include <vector>

#include "mmenum/blossom.hpp"
#include "mmenum/matching.hpp"
#include "mmenum/maximum_enum.hpp"
#include "mmenum/sink.hpp"
#include "mmenum/store.hpp"

namespace mmenum {

/// Max-priority queue over small integer keys 0..max_key, one FIFO bucket
/// per key. The top pointer moves up on push and scans down on pop.
template <class T>
class CardinalityBucketQueue {
public:
    explicit CardinalityBucketQueue(std::size_t max_key) : buckets_(max_key + 1) {}

    void push(std::size_t key, T value) {
        if (key >= buckets_.size()) {
            throw usage_error("bucket key " + std::to_string(key) + " exceeds the maximum");
        }
        buckets_[key].push_back(std::move(value));
        if (size_ == 0 || key > top_) {
            top_ = key;
        }
        ++size_;
    }

    bool empty() const noexcept { return size_ == 0; }
    std::size_t size() const noexcept { return size_; }

    /// Key of the highest nonempty bucket. Queue must be nonempty.
    std::size_t top_key() const noexcept { return top_; }

    /// Removes the oldest element of the highest nonempty bucket.
    T pop() {
        if (size_ == 0) {
            throw usage_error("pop from an empty queue");
        }
        T out = std::move(buckets_[top_].front());
        buckets_[top_].pop_front();
        --size_;
        while (size_ > 0 && buckets_[top_].empty()) {
            --top_;
        }
        return out;
    }

private:
    std::vector<std::deque<T>> buckets_;
    std::size_t top_ = 0;
    std::size_t size_ = 0;
};

/// The k largest maximal matchings, in non-increasing cardinality.
///
/// Phase one takes maximum matchings from the binary-partition enumerator;
/// phase two repeatedly expands a largest queued matching. The seen-store
/// covers every emitted or queued matching, so nothing is emitted twice.
/// Neighbors of cardinality ν are not queued during phase one: the first
/// phase emits all of them itself. Fewer than k outputs means the graph has
/// fewer than k maximal matchings.
template <MatchingSink Sink>
TraversalStats enumerate_kbest(const Graph& g, std::size_t k, Sink&& sink) {
    if (k < 1) {
        throw usage_error("k must be at least 1");
    }
    Matching start = maximum_matching(g);
    std::size_t nu = start.size();

    TraversalStats stats;
    MatchingStore seen;
    CardinalityBucketQueue<Matching> queue(nu);
    bool halted = false;

    auto expand = [&](const Matching& m, bool skip_maximum) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (m.contains(e)) {
                continue;
            }
            Matching next = swap_in(g, m, e);
            if (skip_maximum && next.size() == nu) {
                continue;
            }
            if (seen.insert(g, next)) {
                std::size_t key = next.size();
                queue.push(key, std::move(next));
            }
        }
        stats.peak_queue = std::max(stats.peak_queue, queue.size());
    };

    auto phase_one = [&](const Matching& m) {
        ++stats.emitted;
        if (!detail::emit(sink, m)) {
            stats.stopped = true;
            halted = true;
            return false;
        }
        seen.insert(g, m);
        if (stats.emitted == k) {
            halted = true;
            return false;
        }
        expand(m, true);
        return true;
    };
    auto partition_stats = enumerate_maximum(g, start, phase_one);
    stats.branch_checks = partition_stats.branch_checks;
    stats.max_checks_per_node = partition_stats.max_checks_per_node;

    while (!halted && !queue.empty()) {
        Matching m = queue.pop();
        ++stats.emitted;
        if (!detail::emit(sink, m)) {
            stats.stopped = true;
            break;
        }
        if (stats.emitted == k) {
            break;
        }
        expand(m, false);
    }
    stats.store_size = seen.size();
    stats.store_nodes = seen.node_count();
    return stats;
}

}  // namespace mmenum
