#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mmenum/blossom.hpp"
#include "mmenum/graph.hpp"
#include "mmenum/matching.hpp"
#include "mmenum/sink.hpp"

namespace mmenum {

/// Nonemptiness check for one binary-partition branch.
///
/// `m` is a maximum matching of g. With G' = g minus the endpoints of
/// `include` minus the edges in `exclude`, m ∩ E(G') must have exactly
/// ν(g) − |include| − 1 edges; then the branch holds a maximum matching iff
/// G' has an (m ∩ E(G'))-augmenting path. Returns the augmented matching
/// joined with `include`, or nullopt.
inline std::optional<Matching> check_branch_nonempty(const Graph& g, std::span<const EdgeId> include,
                                                     std::span<const EdgeId> exclude, const Matching& m) {
    if (!is_matching(g, include)) {
        throw usage_error("include set is not a matching");
    }
    for (EdgeId e : include) {
        for (EdgeId f : exclude) {
            if (e == f) {
                throw usage_error("include and exclude sets intersect");
            }
        }
    }
    std::size_t nu = maximum_matching(g).size();
    if (m.size() != nu) {
        throw usage_error("reference matching is not maximum");
    }
    Restriction r = Restriction::from_sets(g, include, exclude);
    Matching inside(g);
    for (EdgeId e : m.edges()) {
        if (r.keeps(g, e)) {
            inside.add(g, e);
        }
    }
    if (inside.size() + include.size() + 1 != nu) {
        throw usage_error("reference matching must lose exactly one edge to the branch restriction");
    }
    auto path = detail::augmenting_path_unchecked(g, inside, r);
    if (!path) {
        return std::nullopt;
    }
    augment(g, inside, *path);
    for (EdgeId e : include) {
        inside.add(g, e);
    }
    return inside;
}

namespace detail {

template <class Sink>
class BinaryPartition {
public:
    BinaryPartition(const Graph& g, Sink& sink, TraversalStats& stats) : g_(g), sink_(sink), stats_(stats) {
        r_.removed_vertices.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        r_.removed_edges.assign(static_cast<std::size_t>(g.edge_count()), 0);
        pinned_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    }

    // Emits `witness`, then splits the remaining solutions of this node by
    // the unpinned witness edges e1 < e2 < ...: branch i pins e1..e(i-1) and
    // forbids ei. Returns false once the sink asks to stop.
    bool visit(const Matching& witness) {
        ++stats_.emitted;
        if (!emit(sink_, witness)) {
            stats_.stopped = true;
            return false;
        }
        std::vector<EdgeId> branch_edges;
        for (EdgeId e : witness.edges()) {
            if (!pinned_[e]) {
                branch_edges.push_back(e);
            }
        }
        std::size_t checks = 0;
        std::size_t pinned_here = 0;
        bool keep_going = true;
        for (EdgeId e : branch_edges) {
            r_.removed_edges[e] = 1;
            Matching child = witness;
            child.remove(g_, e);
            ++checks;
            if (auto path = augmenting_path_unchecked(g_, child, r_)) {
                augment(g_, child, *path);
                keep_going = visit(child);
            }
            r_.removed_edges[e] = 0;
            if (!keep_going) {
                break;
            }
            pin(e, 1);
            ++pinned_here;
        }
        for (std::size_t i = 0; i < pinned_here; ++i) {
            pin(branch_edges[i], 0);
        }
        stats_.branch_checks += checks;
        stats_.max_checks_per_node = std::max(stats_.max_checks_per_node, checks);
        return keep_going;
    }

private:
    void pin(EdgeId e, char on) {
        pinned_[e] = on;
        r_.removed_vertices[g_.edge(e).u] = on;
        r_.removed_vertices[g_.edge(e).v] = on;
    }

    const Graph& g_;
    Sink& sink_;
    TraversalStats& stats_;
    Restriction r_;
    std::vector<char> pinned_;
};

}  // namespace detail

/// Emits every maximum matching of g exactly once, one per recursion node,
/// starting from `start` (which must be a maximum matching).
template <MatchingSink Sink>
TraversalStats enumerate_maximum(const Graph& g, const Matching& start, Sink&& sink) {
    TraversalStats stats;
    detail::BinaryPartition<std::remove_reference_t<Sink>> bp(g, sink, stats);
    bp.visit(start);
    return stats;
}

template <MatchingSink Sink>
TraversalStats enumerate_maximum(const Graph& g, Sink&& sink) {
    return enumerate_maximum(g, maximum_matching(g), std::forward<Sink>(sink));
}

}  // namespace mmenum
