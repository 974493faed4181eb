#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "mmenum/graph.hpp"
#include "mmenum/matching.hpp"

namespace mmenum {

/// Simple path v1..vk together with its k-1 edges.
struct AlternatingPath {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

/// Logical deletion of vertices and edges, used to search G' without copying
/// it. An empty mask means nothing of that kind is removed.
struct Restriction {
    std::vector<char> removed_vertices;
    std::vector<char> removed_edges;

    bool vertex_removed(Vertex v) const noexcept {
        return !removed_vertices.empty() && removed_vertices[static_cast<std::size_t>(v)];
    }
    bool edge_removed(EdgeId e) const noexcept {
        return !removed_edges.empty() && removed_edges[static_cast<std::size_t>(e)];
    }

    static Restriction none() { return {}; }

    /// G minus the endpoints of `include` minus the edges in `exclude`.
    static Restriction from_sets(const Graph& g, std::span<const EdgeId> include, std::span<const EdgeId> exclude) {
        Restriction r;
        r.removed_vertices.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        r.removed_edges.assign(static_cast<std::size_t>(g.edge_count()), 0);
        for (EdgeId e : include) {
            if (!g.valid_edge(e)) {
                throw usage_error("edge id " + std::to_string(e) + " out of range");
            }
            r.removed_vertices[g.edge(e).u] = 1;
            r.removed_vertices[g.edge(e).v] = 1;
        }
        for (EdgeId e : exclude) {
            if (!g.valid_edge(e)) {
                throw usage_error("edge id " + std::to_string(e) + " out of range");
            }
            r.removed_edges[e] = 1;
        }
        return r;
    }

    bool keeps(const Graph& g, EdgeId e) const noexcept {
        return !edge_removed(e) && !vertex_removed(g.edge(e).u) && !vertex_removed(g.edge(e).v);
    }
};

namespace detail {

// Edmonds' blossom search from a single root, in the contracted-base form:
// alternating BFS where an edge closing an odd cycle relabels the cycle's
// vertices to a common base. Vertices and incident edges are scanned in
// ascending id order. Scratch vectors are owned by the instance, so one
// instance must not be shared between threads.
class BlossomSearch {
public:
    BlossomSearch(const Graph& g, const Restriction& r) : g_(g), r_(r) {
        auto n = static_cast<std::size_t>(g.vertex_count());
        match_.assign(n, kNoVertex);
        parent_.resize(n);
        base_.resize(n);
        used_.resize(n);
        blossom_.resize(n);
        lca_mark_.resize(n);
    }

    void set_partner(Vertex v, Vertex w) { match_[v] = w; }
    Vertex partner(Vertex v) const { return match_[v]; }

    /// Free vertex at the far end of an augmenting path from root, or
    /// kNoVertex. On success parent_/match_ encode the path.
    Vertex search(Vertex root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNoVertex);
        for (std::size_t i = 0; i < base_.size(); ++i) {
            base_[i] = static_cast<Vertex>(i);
        }
        std::queue<Vertex> q;
        used_[root] = 1;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (EdgeId e : g_.incident(v)) {
                if (r_.edge_removed(e)) {
                    continue;
                }
                Vertex to = g_.edge(e).other(v);
                if (r_.vertex_removed(to) || base_[v] == base_[to] || match_[v] == to) {
                    continue;
                }
                if (to == root || (match_[to] != kNoVertex && parent_[match_[to]] != kNoVertex)) {
                    Vertex cur = lowest_common_base(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::size_t i = 0; i < base_.size(); ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(static_cast<Vertex>(i));
                            }
                        }
                    }
                } else if (parent_[to] == kNoVertex) {
                    parent_[to] = v;
                    if (match_[to] == kNoVertex) {
                        return to;
                    }
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return kNoVertex;
    }

    /// Reads the path ending at `tail` (as returned by search) back to its root.
    AlternatingPath extract(Vertex tail) const {
        AlternatingPath p;
        Vertex v = tail;
        p.vertices.push_back(v);
        while (true) {
            Vertex pv = parent_[v];
            p.vertices.push_back(pv);
            Vertex ppv = match_[pv];
            if (ppv == kNoVertex) {
                break;
            }
            p.vertices.push_back(ppv);
            v = ppv;
        }
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            p.edges.push_back(*g_.find_edge(p.vertices[i], p.vertices[i + 1]));
        }
        return p;
    }

    void augment(Vertex tail) {
        Vertex v = tail;
        while (v != kNoVertex) {
            Vertex pv = parent_[v];
            Vertex ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
    }

private:
    Vertex lowest_common_base(Vertex a, Vertex b) {
        std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
        while (true) {
            a = base_[a];
            lca_mark_[a] = 1;
            if (match_[a] == kNoVertex) {
                break;
            }
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (lca_mark_[b]) {
                return b;
            }
            b = parent_[match_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    const Graph& g_;
    const Restriction& r_;
    std::vector<Vertex> match_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> used_;
    std::vector<char> blossom_;
    std::vector<char> lca_mark_;
};

// Tries roots in ascending id order. m is trusted to lie inside r; edges of m
// on removed vertices are invisible to the search.
inline std::optional<AlternatingPath> augmenting_path_unchecked(const Graph& g, const Matching& m,
                                                                const Restriction& r) {
    BlossomSearch s(g, r);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (m.is_matched(v)) {
            s.set_partner(v, m.partner(g, v));
        }
    }
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (r.vertex_removed(root) || m.is_matched(root)) {
            continue;
        }
        Vertex tail = s.search(root);
        if (tail != kNoVertex) {
            return s.extract(tail);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Flips membership of the path's edges in m. The path must be m-augmenting.
inline void augment(const Graph& g, Matching& m, const AlternatingPath& path) {
    for (EdgeId e : path.edges) {
        if (m.contains(e)) {
            m.remove(g, e);
        }
    }
    for (EdgeId e : path.edges) {
        if (m.can_add(g, e)) {
            m.add(g, e);
        }
    }
}

/// An m-augmenting path in g restricted by r, if one exists.
/// Throws usage_error when the masks have the wrong size or m uses a removed
/// vertex or edge.
inline std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const Matching& m,
                                                           const Restriction& r = Restriction::none()) {
    if ((!r.removed_vertices.empty() && r.removed_vertices.size() != static_cast<std::size_t>(g.vertex_count())) ||
        (!r.removed_edges.empty() && r.removed_edges.size() != static_cast<std::size_t>(g.edge_count()))) {
        throw usage_error("restriction mask size does not match the graph");
    }
    for (EdgeId e : m.edges()) {
        if (!r.keeps(g, e)) {
            throw usage_error("matching uses an edge outside the restricted graph");
        }
    }
    return detail::augmenting_path_unchecked(g, m, r);
}

/// Maximum cardinality matching by repeated blossom augmentation.
///
/// Roots are tried once each in ascending order: a vertex with no augmenting
/// path never gains one after later augmentations.
inline Matching maximum_matching(const Graph& g) {
    Restriction none;
    detail::BlossomSearch s(g, none);
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (s.partner(root) != kNoVertex) {
            continue;
        }
        Vertex tail = s.search(root);
        if (tail != kNoVertex) {
            s.augment(tail);
        }
    }
    Matching m(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Vertex w = s.partner(v);
        if (w != kNoVertex && v < w) {
            m.add(g, *g.find_edge(v, w));
        }
    }
    return m;
}

}  // namespace mmenum
