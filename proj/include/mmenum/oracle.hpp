#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "mmenum/matching.hpp"
#include "mmenum/store.hpp"

namespace mmenum {

// Ground truth for tests. Exponential time, no cleverness.

struct OracleReport {
    std::set<CanonicalEncoding> matchings;
    std::map<std::size_t, std::size_t> by_cardinality;
    std::size_t nu = 0;
};

inline constexpr EdgeId kOracleEdgeLimit = 30;
inline constexpr EdgeId kSubsetOracleEdgeLimit = 20;

namespace detail {

inline void check_guard(const Graph& g, EdgeId limit) {
    if (g.edge_count() > limit) {
        throw usage_error("brute force limited to " + std::to_string(limit) + " edges, graph has " +
                          std::to_string(g.edge_count()));
    }
}

inline void add_to_report(OracleReport& r, CanonicalEncoding enc) {
    std::size_t card = enc.size() / 2;
    if (r.matchings.insert(std::move(enc)).second) {
        ++r.by_cardinality[card];
        r.nu = std::max(r.nu, card);
    }
}

// Include-or-exclude recursion over edges in id order; maximality is checked
// at the leaves only.
template <class Leaf>
void each_matching(const Graph& g, Matching& m, EdgeId next, Leaf& leaf) {
    if (next == g.edge_count()) {
        leaf(m);
        return;
    }
    if (m.can_add(g, next)) {
        m.add(g, next);
        each_matching(g, m, next + 1, leaf);
        m.remove(g, next);
    }
    each_matching(g, m, next + 1, leaf);
}

}  // namespace detail

/// Every maximal matching, by branching on each edge.
inline OracleReport oracle_all_maximal(const Graph& g, EdgeId edge_limit = kOracleEdgeLimit) {
    detail::check_guard(g, edge_limit);
    OracleReport r;
    Matching m(g);
    auto leaf = [&](const Matching& x) {
        if (is_maximal(g, x)) {
            detail::add_to_report(r, canonical_encode(g, x));
        }
    };
    detail::each_matching(g, m, 0, leaf);
    return r;
}

/// Every maximal matching, by filtering all 2^m edge subsets. Independent of
/// the Matching type on purpose: plain bitmasks and endpoint arrays.
inline OracleReport oracle_all_maximal_subsets(const Graph& g, EdgeId edge_limit = kSubsetOracleEdgeLimit) {
    detail::check_guard(g, std::min(edge_limit, kSubsetOracleEdgeLimit));
    OracleReport r;
    auto m = static_cast<unsigned>(g.edge_count());
    auto edges = g.edges();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
        bool ok = true;
        for (unsigned i = 0; i < m && ok; ++i) {
            if (mask >> i & 1u) {
                ok = !covered[edges[i].u] && !covered[edges[i].v];
                covered[edges[i].u] = covered[edges[i].v] = 1;
            }
        }
        if (!ok) {
            continue;
        }
        bool maximal = true;
        for (unsigned i = 0; i < m && maximal; ++i) {
            maximal = covered[edges[i].u] || covered[edges[i].v];
        }
        if (!maximal) {
            continue;
        }
        CanonicalEncoding enc;
        for (unsigned i = 0; i < m; ++i) {
            if (mask >> i & 1u) {
                enc.push_back(edges[i].u);
                enc.push_back(edges[i].v);
            }
        }
        detail::add_to_report(r, std::move(enc));
    }
    return r;
}

/// Matching number by exhaustive search over all matchings.
inline std::size_t oracle_nu(const Graph& g, EdgeId edge_limit = kOracleEdgeLimit) {
    detail::check_guard(g, edge_limit);
    std::size_t best = 0;
    Matching m(g);
    auto leaf = [&](const Matching& x) { best = std::max(best, x.size()); };
    detail::each_matching(g, m, 0, leaf);
    return best;
}

}  // namespace mmenum
