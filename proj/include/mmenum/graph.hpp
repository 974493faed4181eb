#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmenum/error.hpp"

namespace mmenum {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Label = std::int64_t;

inline constexpr EdgeId kNoEdge = -1;
inline constexpr Vertex kNoVertex = -1;

// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
    bool touches(Vertex w) const noexcept { return w == u || w == v; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph without isolated vertices.
///
/// Vertices are dense ids 0..n-1; each keeps the label it had in the input.
/// Edge ids follow lexicographic (u, v) order, which is the single edge
/// ordering used by greedy completion, the trie encoding and the parent
/// function. Because of that ordering every incidence list is sorted both by
/// edge id and by neighbor id. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a normalized graph from labeled endpoint pairs. Labels are
    /// renumbered densely in ascending order; unreferenced labels vanish.
    /// Throws usage_error on a self-loop or a repeated edge.
    static Graph from_edges(std::span<const std::pair<Label, Label>> labeled) {
        std::vector<Label> labels;
        labels.reserve(labeled.size() * 2);
        for (const auto& [a, b] : labeled) {
            if (a == b) {
                throw usage_error("self-loop on vertex " + std::to_string(a));
            }
            labels.push_back(a);
            labels.push_back(b);
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

        auto dense = [&](Label l) {
            return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
        };

        Graph g;
        g.edges_.reserve(labeled.size());
        for (const auto& [a, b] : labeled) {
            Vertex x = dense(a);
            Vertex y = dense(b);
            g.edges_.push_back(Edge{std::min(x, y), std::max(x, y)});
        }
        g.labels_ = std::move(labels);
        std::sort(g.edges_.begin(), g.edges_.end());
        auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
        if (dup != g.edges_.end()) {
            throw usage_error("duplicate edge " + std::to_string(g.labels_[dup->u]) + " " +
                              std::to_string(g.labels_[dup->v]));
        }

        g.incidence_.assign(g.labels_.size(), {});
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            g.incidence_[g.edges_[e].u].push_back(e);
            g.incidence_[g.edges_[e].v].push_back(e);
        }
        for (const auto& inc : g.incidence_) {
            g.max_degree_ = std::max(g.max_degree_, inc.size());
        }
        return g;
    }

    static Graph from_edges(std::initializer_list<std::pair<Label, Label>> labeled) {
        std::vector<std::pair<Label, Label>> v(labeled);
        return from_edges(std::span<const std::pair<Label, Label>>(v));
    }

    Vertex vertex_count() const noexcept { return static_cast<Vertex>(labels_.size()); }
    EdgeId edge_count() const noexcept { return static_cast<EdgeId>(edges_.size()); }
    std::size_t max_degree() const noexcept { return max_degree_; }

    bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
    bool valid_edge(EdgeId e) const noexcept { return e >= 0 && e < edge_count(); }

    const Edge& edge(EdgeId e) const noexcept { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Incident edge ids of v, ascending.
    std::span<const EdgeId> incident(Vertex v) const noexcept {
        return incidence_[static_cast<std::size_t>(v)];
    }

    Label label(Vertex v) const noexcept { return labels_[static_cast<std::size_t>(v)]; }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const noexcept {
        if (!valid_vertex(a) || !valid_vertex(b) || a == b) {
            return std::nullopt;
        }
        auto inc = incident(a);
        auto it = std::lower_bound(inc.begin(), inc.end(), b,
                                   [&](EdgeId e, Vertex w) { return edge(e).other(a) < w; });
        if (it != inc.end() && edge(*it).other(a) == b) {
            return *it;
        }
        return std::nullopt;
    }

    std::optional<Vertex> find_vertex(Label l) const noexcept {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || *it != l) {
            return std::nullopt;
        }
        return static_cast<Vertex>(it - labels_.begin());
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Label> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::size_t max_degree_ = 0;
};

// Γ(v): edges incident to v.
inline std::vector<EdgeId> gamma_vertex(const Graph& g, Vertex v) {
    if (!g.valid_vertex(v)) {
        throw usage_error("vertex " + std::to_string(v) + " out of range");
    }
    auto inc = g.incident(v);
    return {inc.begin(), inc.end()};
}

// Γ(e): edges sharing an endpoint with e, excluding e. Ascending ids.
inline std::vector<EdgeId> gamma_edge(const Graph& g, EdgeId e) {
    if (!g.valid_edge(e)) {
        throw usage_error("edge id " + std::to_string(e) + " out of range");
    }
    const Edge& ed = g.edge(e);
    std::vector<EdgeId> out;
    auto a = g.incident(ed.u);
    auto b = g.incident(ed.v);
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    // the only id present in both lists is e itself (simple graph)
    out.erase(std::remove(out.begin(), out.end(), e), out.end());
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <class Int>
std::optional<Int> parse_int(std::string_view tok) {
    Int value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace detail

/// Reads the edge-list format: one "u v" pair of non-negative integers per
/// line, '#' starts a comment line, blank lines are ignored.
inline Graph parse_graph(std::istream& in) {
    std::vector<std::pair<Label, Label>> pairs;
    std::map<std::pair<Label, Label>, std::size_t> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto s = detail::trim(line);
        if (s.empty() || s.front() == '#') {
            continue;
        }
        auto toks = detail::split_ws(s);
        if (toks.size() != 2) {
            throw parse_error("expected two vertex ids, got \"" + std::string(s) + "\"", lineno);
        }
        auto a = detail::parse_int<Label>(toks[0]);
        auto b = detail::parse_int<Label>(toks[1]);
        if (!a || !b || *a < 0 || *b < 0) {
            throw parse_error("malformed vertex id in \"" + std::string(s) + "\"", lineno);
        }
        if (*a == *b) {
            throw parse_error("self-loop on vertex " + std::to_string(*a), lineno);
        }
        auto key = std::minmax(*a, *b);
        auto [it, fresh] = seen.emplace(key, lineno);
        if (!fresh) {
            throw parse_error("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second) +
                                  " (first on line " + std::to_string(it->second) + ")",
                              lineno);
        }
        pairs.emplace_back(*a, *b);
    }
    return Graph::from_edges(std::span<const std::pair<Label, Label>>(pairs));
}

inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

/// One "u v" line per edge in edge-id order, using the original labels.
inline void write_graph(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges()) {
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    }
}

inline std::string to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace mmenum
