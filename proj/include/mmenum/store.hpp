#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mmenum/graph.hpp"
#include "mmenum/matching.hpp"

namespace mmenum {

// (u1, v1, u2, v2, ...) with u_i < v_i and pairs in lexicographic order.
using CanonicalEncoding = std::vector<Vertex>;

/// Canonical integer sequence of a matching.
///
/// A single pass over the vertices in ascending order emits each edge at its
/// smaller endpoint; since every vertex is covered by at most one edge this is
/// a bucket sort of the edges by first endpoint, linear in n.
inline CanonicalEncoding canonical_encode(const Graph& g, const Matching& m) {
    CanonicalEncoding enc;
    enc.reserve(2 * m.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        EdgeId e = m.mate(v);
        if (e != kNoEdge && g.edge(e).u == v) {
            enc.push_back(v);
            enc.push_back(g.edge(e).v);
        }
    }
    return enc;
}

/// Set of integer sequences backed by a trie.
///
/// Each node keeps its children as a sorted (symbol, node) array and a
/// terminal flag, which plays the role of the end-of-sequence marker: a
/// stored sequence is never confused with a stored prefix of it, and the
/// empty sequence is storable. Work per operation is the sequence length
/// times a binary search over one node's fan-out. Single writer.
class MatchingStore {
    template <class Kids>
    static auto find_child(Kids& kids, Vertex s) {
        return std::lower_bound(kids.begin(), kids.end(), s,
                                [](const auto& kid, Vertex x) { return kid.first < x; });
    }

public:
    MatchingStore() : nodes_(1) {}

    bool contains(std::span<const Vertex> seq) const {
        std::uint32_t at = 0;
        for (Vertex s : seq) {
            const auto& kids = nodes_[at].children;
            auto it = find_child(kids, s);
            if (it == kids.end() || it->first != s) {
                return false;
            }
            at = it->second;
        }
        return nodes_[at].terminal;
    }

    /// Returns true if seq was not present before.
    bool insert(std::span<const Vertex> seq) {
        std::uint32_t at = 0;
        for (Vertex s : seq) {
            auto& kids = nodes_[at].children;
            auto it = find_child(kids, s);
            if (it != kids.end() && it->first == s) {
                at = it->second;
                continue;
            }
            auto fresh = static_cast<std::uint32_t>(nodes_.size());
            kids.insert(it, {s, fresh});
            // `kids` may dangle after this push_back
            nodes_.emplace_back();
            at = fresh;
        }
        if (nodes_[at].terminal) {
            return false;
        }
        nodes_[at].terminal = true;
        ++size_;
        return true;
    }

    bool contains(const Graph& g, const Matching& m) const { return contains(canonical_encode(g, m)); }
    bool insert(const Graph& g, const Matching& m) { return insert(canonical_encode(g, m)); }

    std::size_t size() const noexcept { return size_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }

private:
    struct Node {
        std::vector<std::pair<Vertex, std::uint32_t>> children;
        bool terminal = false;
    };

    std::vector<Node> nodes_;
    std::size_t size_ = 0;
};

}  // namespace mmenum
