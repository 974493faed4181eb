#pragma once

#include <deque>
#include <vector>

#include "mmenum/blossom.hpp"
#include "mmenum/matching.hpp"
#include "mmenum/maximum_enum.hpp"
#include "mmenum/sink.hpp"
#include "mmenum/store.hpp"

namespace mmenum {

/// Supergraph neighbors of a maximal matching: one swap_in(m, e) per edge
/// e ∉ m, in ascending e. Duplicates are kept.
inline std::vector<Matching> supergraph_neighbors(const Graph& g, const Matching& m) {
    if (!is_maximal(g, m)) {
        throw usage_error("supergraph neighbors are defined for maximal matchings only");
    }
    std::vector<Matching> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!m.contains(e)) {
            out.push_back(swap_in(g, m, e));
        }
    }
    return out;
}

/// All maximal matchings of cardinality >= t, each once.
///
/// For t < ν this is a FIFO breadth-first traversal of the supergraph from a
/// maximum matching, pruned below t, with a trie of every matching ever
/// queued. Space grows with the number of solutions. t = ν is delegated to
/// the binary-partition enumerator; t > ν emits nothing.
template <MatchingSink Sink>
TraversalStats enumerate_large_bfs(const Graph& g, std::size_t t, Sink&& sink) {
    Matching start = maximum_matching(g);
    std::size_t nu = start.size();
    if (t > nu) {
        return {};
    }
    if (t == nu) {
        return enumerate_maximum(g, start, sink);
    }

    TraversalStats stats;
    MatchingStore seen;
    std::deque<Matching> queue;
    seen.insert(g, start);
    queue.push_back(std::move(start));
    stats.peak_queue = 1;

    while (!queue.empty()) {
        Matching m = std::move(queue.front());
        queue.pop_front();
        ++stats.emitted;
        if (!detail::emit(sink, m)) {
            stats.stopped = true;
            break;
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (m.contains(e)) {
                continue;
            }
            Matching next = swap_in(g, m, e);
            if (next.size() >= t && seen.insert(g, next)) {
                queue.push_back(std::move(next));
            }
        }
        stats.peak_queue = std::max(stats.peak_queue, queue.size());
    }
    stats.store_size = seen.size();
    stats.store_nodes = seen.node_count();
    return stats;
}

}  // namespace mmenum
