#pragma once

#include <optional>
#include <vector>

#include "mmenum/blossom.hpp"
#include "mmenum/matching.hpp"
#include "mmenum/maximum_enum.hpp"
#include "mmenum/sink.hpp"

namespace mmenum {

/// Fixed maximum matching at the root of the reverse-search tree.
struct Root {
    Matching matching;

    static Root of(const Graph& g) { return Root{maximum_matching(g)}; }
};

namespace detail {

// The edge e with par(m) = swap_in(m, e). Vertices unmatched in m but matched
// in the root are exactly the path-component ends of G[m △ R*] whose
// component edge lies in R* \ m; the smallest such R*-edge wins. Without
// path components the smallest edge of R* \ m is used. kNoEdge iff m == R*.
inline EdgeId parent_edge(const Graph& g, const Matching& root, const Matching& m) {
    EdgeId best = kNoEdge;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!m.is_matched(v) && root.is_matched(v)) {
            EdgeId e = root.mate(v);
            if (best == kNoEdge || e < best) {
                best = e;
            }
        }
    }
    if (best != kNoEdge) {
        return best;
    }
    for (EdgeId e : root.edges()) {
        if (!m.contains(e)) {
            return e;
        }
    }
    return kNoEdge;
}

}  // namespace detail

/// par(m) with respect to the root. m must be maximal and differ from the root.
inline Matching compute_parent(const Graph& g, const Root& root, const Matching& m) {
    if (m == root.matching) {
        throw usage_error("the root has no parent");
    }
    if (!is_maximal(g, m)) {
        throw usage_error("parent is defined for maximal matchings only");
    }
    return swap_in(g, m, detail::parent_edge(g, root.matching, m));
}

/// Lazily produces the children of one tree node.
///
/// A child M' of m is rebuilt from the edge e ∈ m that par(M') swaps in and
/// F = M' ∩ Γ(e), |F| <= 2: the edges A of m \ {e} touching F are dropped
/// and M' = (m \ (A ∪ {e})) ∪ F. Every (e, F) pair is tried; a candidate is a
/// child iff it is maximal, has at least t edges, is not the root, and its
/// parent computation picks this very e and lands back on m. The last test
/// also makes each child come from exactly one (e, F), so no dedup is needed.
class ChildEnumerator {
public:
    ChildEnumerator(const Graph& g, const Root& root, Matching node, std::size_t t)
        : g_(&g), root_(&root), node_(std::move(node)), t_(t) {
        load_edge();
    }

    const Matching& node() const noexcept { return node_; }

    /// Number of (e, F) pairs examined so far.
    std::size_t candidates() const noexcept { return candidates_; }
    std::size_t found() const noexcept { return found_; }

    std::optional<Matching> next() {
        const Graph& g = *g_;
        while (edge_index_ < node_.size()) {
            EdgeId e = node_.edges()[edge_index_];
            if (!apply_candidate(e)) {
                advance();
                continue;
            }
            // node_ now holds the candidate. It was maximal before, so only
            // vertices freed by the swap can expose an addable edge.
            bool pass = node_.size() >= t_ && node_ != root_->matching && is_maximal_around(g, node_, freed_) &&
                        detail::parent_edge(g, root_->matching, node_) == e;
            std::optional<Matching> cand;
            std::optional<Matching> parent;
            if (pass) {
                parent = swap_in(g, node_, e);
                cand = node_;
            }
            undo_candidate();
            advance();
            if (pass && *parent == node_) {
                ++found_;
                return cand;
            }
        }
        return std::nullopt;
    }

private:
    void load_edge() {
        a_ = -1;
        b_ = -1;
        if (edge_index_ < node_.size()) {
            gamma_ = gamma_edge(*g_, node_.edges()[edge_index_]);
        }
    }

    // F order: {}, {g0}, {g0,g1}, {g0,g2}, ..., {g1}, {g1,g2}, ...
    void advance() {
        auto d = static_cast<int>(gamma_.size());
        if (a_ == -1) {
            a_ = 0;
            b_ = -1;
        } else if (b_ == -1) {
            b_ = a_ + 1;
        } else {
            ++b_;
        }
        if (b_ >= d) {
            ++a_;
            b_ = -1;
        }
        if (a_ >= d) {
            ++edge_index_;
            load_edge();
        }
    }

    // Turns node_ into (node_ \ (A ∪ {e})) ∪ F for the current F. Returns
    // false, leaving node_ untouched, when F is empty or not a matching.
    bool apply_candidate(EdgeId e) {
        ++candidates_;
        const Graph& g = *g_;
        EdgeId f[2] = {a_ >= 0 ? gamma_[a_] : kNoEdge, b_ >= 0 ? gamma_[b_] : kNoEdge};
        if (f[0] == kNoEdge) {
            return false;  // node_ \ {e} is never maximal
        }
        if (f[1] != kNoEdge) {
            const Edge& x = g.edge(f[0]);
            const Edge& y = g.edge(f[1]);
            if (x.touches(y.u) || x.touches(y.v)) {
                return false;
            }
        }
        removed_.assign({e});
        node_.remove(g, e);
        freed_.assign({g.edge(e).u, g.edge(e).v});
        for (EdgeId fe : f) {
            if (fe == kNoEdge) {
                continue;
            }
            for (Vertex w : {g.edge(fe).u, g.edge(fe).v}) {
                EdgeId clash = node_.mate(w);
                if (clash != kNoEdge) {
                    node_.remove(g, clash);
                    removed_.push_back(clash);
                    freed_.push_back(g.edge(clash).u);
                    freed_.push_back(g.edge(clash).v);
                }
            }
        }
        added_.clear();
        for (EdgeId fe : f) {
            if (fe != kNoEdge) {
                node_.add(g, fe);
                added_.push_back(fe);
            }
        }
        return true;
    }

    void undo_candidate() {
        for (EdgeId fe : added_) {
            node_.remove(*g_, fe);
        }
        for (EdgeId r : removed_) {
            node_.add(*g_, r);
        }
    }

    const Graph* g_;
    const Root* root_;
    Matching node_;
    std::size_t t_;
    std::size_t edge_index_ = 0;
    std::vector<EdgeId> gamma_;
    std::vector<Vertex> freed_;
    std::vector<EdgeId> removed_;
    std::vector<EdgeId> added_;
    int a_ = -1;
    int b_ = -1;
    std::size_t candidates_ = 0;
    std::size_t found_ = 0;
};

/// All children of m with at least t edges, in generation order.
inline std::vector<Matching> children(const Graph& g, const Root& root, const Matching& m, std::size_t t) {
    if (!is_maximal(g, m)) {
        throw usage_error("children are defined for maximal matchings only");
    }
    if (m.size() < t) {
        throw usage_error("node is below the cardinality threshold");
    }
    std::vector<Matching> out;
    ChildEnumerator it(g, root, m, t);
    while (auto c = it.next()) {
        out.push_back(std::move(*c));
    }
    return out;
}

/// All maximal matchings of cardinality >= t by depth-first traversal of the
/// parent-function tree rooted at a maximum matching.
///
/// No global seen-set: the stack holds one node and one child cursor per
/// level, and the tree depth is at most ν. Dispatch for t >= ν matches
/// enumerate_large_bfs.
template <MatchingSink Sink>
TraversalStats enumerate_large_rs(const Graph& g, std::size_t t, Sink&& sink) {
    Root root = Root::of(g);
    std::size_t nu = root.matching.size();
    if (t > nu) {
        return {};
    }
    if (t == nu) {
        return enumerate_maximum(g, root.matching, sink);
    }

    TraversalStats stats;
    std::vector<ChildEnumerator> stack;
    stats.emitted = 1;
    stats.peak_retained = 1;
    if (!detail::emit(sink, root.matching)) {
        stats.stopped = true;
        return stats;
    }
    stack.emplace_back(g, root, root.matching, t);
    stats.max_depth = 1;

    while (!stack.empty()) {
        auto& top = stack.back();
        std::size_t before = top.candidates();
        std::optional<Matching> child = top.next();
        stats.candidates += top.candidates() - before;
        if (!child) {
            stats.max_batch = std::max(stats.max_batch, top.found());
            stack.pop_back();
            continue;
        }
        // live: one node per frame plus the child just produced
        stats.peak_retained = std::max(stats.peak_retained, stack.size() + 1);
        ++stats.emitted;
        if (!detail::emit(sink, *child)) {
            stats.stopped = true;
            break;
        }
        stack.emplace_back(g, root, std::move(*child), t);
        stats.max_depth = std::max(stats.max_depth, stack.size());
    }
    return stats;
}

}  // namespace mmenum
