#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mmenum/graph.hpp"

namespace mmenum {

/// A matching of a fixed graph: sorted edge ids plus a per-vertex mate edge.
///
/// Plain value type. It does not hold a reference to its graph, so every
/// mutating call takes the graph explicitly; mixing graphs is a caller bug.
class Matching {
public:
    Matching() = default;
    explicit Matching(const Graph& g) : mate_(static_cast<std::size_t>(g.vertex_count()), kNoEdge) {}

    /// Throws usage_error if an id is invalid or two edges share an endpoint.
    static Matching from_edges(const Graph& g, std::span<const EdgeId> edges) {
        Matching m(g);
        for (EdgeId e : edges) {
            if (!g.valid_edge(e)) {
                throw usage_error("edge id " + std::to_string(e) + " out of range");
            }
            if (m.contains(e)) {
                continue;
            }
            if (!m.can_add(g, e)) {
                throw usage_error("edges share an endpoint; not a matching");
            }
            m.add(g, e);
        }
        return m;
    }

    static Matching from_edges(const Graph& g, std::initializer_list<EdgeId> edges) {
        std::vector<EdgeId> v(edges);
        return from_edges(g, std::span<const EdgeId>(v));
    }

    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    std::span<const EdgeId> edges() const noexcept { return edges_; }

    bool contains(EdgeId e) const noexcept { return std::binary_search(edges_.begin(), edges_.end(), e); }

    EdgeId mate(Vertex v) const noexcept { return mate_[static_cast<std::size_t>(v)]; }
    bool is_matched(Vertex v) const noexcept { return mate(v) != kNoEdge; }

    /// Vertex matched to v, or kNoVertex.
    Vertex partner(const Graph& g, Vertex v) const noexcept {
        EdgeId e = mate(v);
        return e == kNoEdge ? kNoVertex : g.edge(e).other(v);
    }

    bool can_add(const Graph& g, EdgeId e) const noexcept {
        const Edge& ed = g.edge(e);
        return !is_matched(ed.u) && !is_matched(ed.v);
    }

    void add(const Graph& g, EdgeId e) {
        const Edge& ed = g.edge(e);
        mate_[ed.u] = e;
        mate_[ed.v] = e;
        edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    }

    void remove(const Graph& g, EdgeId e) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) {
            return;
        }
        edges_.erase(it);
        const Edge& ed = g.edge(e);
        mate_[ed.u] = kNoEdge;
        mate_[ed.v] = kNoEdge;
    }

    friend bool operator==(const Matching& a, const Matching& b) noexcept { return a.edges_ == b.edges_; }
    friend auto operator<=>(const Matching& a, const Matching& b) noexcept { return a.edges_ <=> b.edges_; }

private:
    std::vector<EdgeId> edges_;
    std::vector<EdgeId> mate_;
};

inline bool is_matching(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<EdgeId> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        EdgeId e = sorted[i];
        if (!g.valid_edge(e)) {
            throw usage_error("edge id " + std::to_string(e) + " out of range");
        }
        if (i > 0 && sorted[i - 1] == e) {
            continue;
        }
        const Edge& ed = g.edge(e);
        if (used[ed.u] || used[ed.v]) {
            return false;
        }
        used[ed.u] = used[ed.v] = 1;
    }
    return true;
}

/// Every edge outside m has a matched endpoint.
inline bool is_maximal(const Graph& g, const Matching& m) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (m.can_add(g, e)) {
            return false;
        }
    }
    return true;
}

/// Greedy maximal completion: scans all edges in ascending id order and adds
/// each one whose endpoints are both free. Result contains m.
inline Matching complete(const Graph& g, Matching m) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (m.can_add(g, e)) {
            m.add(g, e);
        }
    }
    return m;
}

/// complete((m \ Γ(e)) ∪ {e}) for a maximal m.
///
/// Only the (at most two) edges f1, f2 of m touching e are dropped. The ends
/// of f1, f2 shared with e are matched again by e, so an edge can become
/// addable only at the far ends w1, w2. Rescanning the edges at w1 and w2 in
/// ascending id order therefore gives exactly what complete() would, in
/// O(deg w1 + deg w2) instead of O(|E|).
inline Matching swap_in(const Graph& g, Matching m, EdgeId e) {
    if (m.contains(e)) {
        return m;
    }
    const Edge& ed = g.edge(e);
    Vertex far[2] = {kNoVertex, kNoVertex};
    for (int i = 0; i < 2; ++i) {
        Vertex end = i == 0 ? ed.u : ed.v;
        EdgeId f = m.mate(end);
        if (f != kNoEdge) {
            far[i] = g.edge(f).other(end);
            m.remove(g, f);
        }
    }
    m.add(g, e);
    std::span<const EdgeId> a = far[0] == kNoVertex ? std::span<const EdgeId>{} : g.incident(far[0]);
    std::span<const EdgeId> b = far[1] == kNoVertex ? std::span<const EdgeId>{} : g.incident(far[1]);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        EdgeId f;
        if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
            f = a[i++];
        } else {
            f = b[j++];
        }
        if (m.can_add(g, f)) {
            m.add(g, f);
        }
    }
    return m;
}

/// No edge incident to any of `around` can be added to m. Equivalent to
/// is_maximal() when every other vertex is known to be blocked.
inline bool is_maximal_around(const Graph& g, const Matching& m, std::span<const Vertex> around) {
    for (Vertex v : around) {
        if (m.is_matched(v)) {
            continue;
        }
        for (EdgeId f : g.incident(v)) {
            if (!m.is_matched(g.edge(f).other(v))) {
                return false;
            }
        }
    }
    return true;
}

inline std::size_t intersection_size(const Matching& a, const Matching& b) {
    std::size_t n = 0;
    auto x = a.edges();
    auto y = b.edges();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] < y[j]) {
            ++i;
        } else if (y[j] < x[i]) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

/// "u-v u-v ..." in edge-id order with original vertex labels.
inline std::string render(const Graph& g, const Matching& m) {
    std::string out;
    for (EdgeId e : m.edges()) {
        if (!out.empty()) {
            out += ' ';
        }
        const Edge& ed = g.edge(e);
        out += std::to_string(g.label(ed.u));
        out += '-';
        out += std::to_string(g.label(ed.v));
    }
    return out;
}

/// Inverse of render(). Throws parse_error on unknown vertices or edges and
/// on token lists that are not a matching.
inline Matching parse_matching(const Graph& g, std::string_view line) {
    std::vector<EdgeId> ids;
    for (auto tok : detail::split_ws(detail::trim(line))) {
        auto dash = tok.find('-');
        if (dash == std::string_view::npos) {
            throw parse_error("expected u-v, got \"" + std::string(tok) + "\"", 0);
        }
        auto a = detail::parse_int<Label>(tok.substr(0, dash));
        auto b = detail::parse_int<Label>(tok.substr(dash + 1));
        if (!a || !b) {
            throw parse_error("malformed edge \"" + std::string(tok) + "\"", 0);
        }
        auto u = g.find_vertex(*a);
        auto v = g.find_vertex(*b);
        std::optional<EdgeId> e;
        if (u && v) {
            e = g.find_edge(*u, *v);
        }
        if (!e) {
            throw parse_error("no such edge \"" + std::string(tok) + "\"", 0);
        }
        ids.push_back(*e);
    }
    if (!is_matching(g, ids)) {
        throw parse_error("edges share an endpoint", 0);
    }
    return Matching::from_edges(g, std::span<const EdgeId>(ids));
}

}  // namespace mmenum
