#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace mmenum;
using namespace mmenum::testing;

namespace {

std::vector<CanonicalEncoding> run_rs(const Graph& g, std::size_t t) {
    return collect(g, [&](auto sink) { enumerate_large_rs(g, t, sink); });
}

}  // namespace

TEST(ComputeParent, Examples) {
    Graph p = path_graph(4);
    Root root{Matching::from_edges(p, {0, 2})};
    EXPECT_EQ(compute_parent(p, root, Matching::from_edges(p, {1})), root.matching);
    EXPECT_THROW(compute_parent(p, root, root.matching), usage_error);
    EXPECT_THROW(compute_parent(p, root, Matching::from_edges(p, {0})), usage_error);

    Graph kp = complete_with_pendants(2);
    Root kroot = Root::of(kp);
    EXPECT_EQ(kroot.matching.size(), 4u);
    EXPECT_THROW(compute_parent(kp, kroot, kroot.matching), usage_error);

    Graph c4 = cycle_graph(4);
    EdgeId e01 = *c4.find_edge(0, 1), e12 = *c4.find_edge(1, 2), e23 = *c4.find_edge(2, 3), e03 = *c4.find_edge(0, 3);
    Root croot{Matching::from_edges(c4, {e01, e23})};
    EXPECT_EQ(compute_parent(c4, croot, Matching::from_edges(c4, {e12, e03})), croot.matching);
}

TEST(Children, Examples) {
    Graph p = path_graph(4);
    Root root{Matching::from_edges(p, {0, 2})};
    auto kids = children(p, root, root.matching, 0);
    ASSERT_EQ(kids.size(), 1u);
    EXPECT_EQ(kids[0], Matching::from_edges(p, {1}));

    Graph e = path_graph(2);
    Root eroot = Root::of(e);
    EXPECT_TRUE(children(e, eroot, eroot.matching, 0).empty());

    Graph tri = triangle();
    Root troot{complete(tri, Matching(tri))};
    EXPECT_EQ(troot.matching, Matching::from_edges(tri, {0}));
    auto tk = children(tri, troot, troot.matching, 0);
    ASSERT_EQ(tk.size(), 2u);
    std::set<Matching> got(tk.begin(), tk.end());
    EXPECT_EQ(got, (std::set<Matching>{Matching::from_edges(tri, {1}), Matching::from_edges(tri, {2})}));
    for (const auto& c : tk) {
        EXPECT_EQ(compute_parent(tri, troot, c), troot.matching);
    }
}

TEST(ComputeParent, ProgressAndConvergenceOnCorpus) {
    for (const auto& [name, g] : corpus()) {
        SCOPED_TRACE(name);
        Root root = Root::of(g);
        std::size_t nu = root.matching.size();
        for (const auto& enc : oracle_all_maximal(g).matchings) {
            Matching m = decode(g, enc);
            if (m == root.matching) {
                continue;
            }
            Matching par = compute_parent(g, root, m);
            EXPECT_TRUE(is_maximal(g, par));
            EXPECT_GE(par.size(), std::min(m.size(), nu - 1));
            EXPECT_GT(intersection_size(par, root.matching), intersection_size(m, root.matching));
            std::size_t steps = 0;
            Matching cur = m;
            while (cur != root.matching && steps <= nu) {
                cur = compute_parent(g, root, cur);
                ++steps;
            }
            EXPECT_EQ(cur, root.matching);
            EXPECT_LE(steps, nu);
        }
    }
}

TEST(Children, SoundAndCompleteOnCorpus) {
    for (const auto& [name, g] : corpus(250)) {
        SCOPED_TRACE(name);
        Root root = Root::of(g);
        auto oracle = oracle_all_maximal(g);
        std::map<CanonicalEncoding, std::set<CanonicalEncoding>> by_parent;
        for (const auto& enc : oracle.matchings) {
            Matching m = decode(g, enc);
            if (m != root.matching) {
                by_parent[canonical_encode(g, compute_parent(g, root, m))].insert(enc);
            }
        }
        for (std::size_t t = 0; t <= oracle.nu; ++t) {
            for (const auto& enc : oracle.matchings) {
                if (enc.size() / 2 < t) {
                    continue;
                }
                Matching m = decode(g, enc);
                std::set<CanonicalEncoding> expect;
                for (const auto& c : by_parent[enc]) {
                    if (c.size() / 2 >= t) {
                        expect.insert(c);
                    }
                }
                std::vector<CanonicalEncoding> got;
                for (const auto& c : children(g, root, m, t)) {
                    got.push_back(canonical_encode(g, c));
                }
                EXPECT_FALSE(has_duplicates(got));
                EXPECT_EQ(as_set(got), expect) << "t=" << t;
            }
        }
    }
}

TEST(ChildEnumerator, CandidateBound) {
    for (const auto& [name, g] : corpus(200)) {
        SCOPED_TRACE(name);
        Root root = Root::of(g);
        for (const auto& enc : oracle_all_maximal(g).matchings) {
            Matching m = decode(g, enc);
            std::size_t d = 0;
            for (EdgeId e : m.edges()) {
                d = std::max(d, gamma_edge(g, e).size());
            }
            ChildEnumerator it(g, root, m, 0);
            while (it.next()) {
            }
            EXPECT_LE(it.candidates(), m.size() * (1 + d + d * d));
        }
    }
}

TEST(EnumerateLargeRs, Examples) {
    Graph kp = complete_with_pendants(2);
    EXPECT_EQ(run_rs(kp, 4).size(), 1u);
    EXPECT_EQ(run_rs(kp, 3).size(), 7u);
    EXPECT_EQ(run_rs(kp, 0).size(), 10u);
    EXPECT_TRUE(run_rs(kp, 5).empty());
    Graph p = path_graph(4);
    EXPECT_EQ(as_set(run_rs(p, 0)), (std::set<CanonicalEncoding>{{0, 1, 2, 3}, {1, 2}}));
}

TEST(EnumerateLargeRs, EqualsOracleAndBfsOnCorpus) {
    for (const auto& [name, g] : corpus(200)) {
        SCOPED_TRACE(name);
        auto oracle = oracle_all_maximal(g);
        for (std::size_t t = 0; t <= oracle.nu + 1; ++t) {
            auto rs = run_rs(g, t);
            EXPECT_FALSE(has_duplicates(rs));
            EXPECT_EQ(as_set(rs), oracle_at_least(oracle, t)) << "t=" << t;
            auto bfs = collect(g, [&](auto sink) { enumerate_large_bfs(g, t, sink); });
            EXPECT_EQ(as_set(rs), as_set(bfs));
        }
    }
}

TEST(EnumerateLargeRs, RetainedBoundedByDepthAndBatch) {
    for (int n = 2; n <= 4; ++n) {
        Graph g = complete_with_pendants(n);
        std::size_t count = 0;
        auto stats = enumerate_large_rs(g, 0, [&](const Matching&) { ++count; });
        EXPECT_EQ(stats.emitted, count);
        EXPECT_GE(stats.max_depth, 1u);
        EXPECT_LE(stats.max_depth, static_cast<std::size_t>(2 * n) + 1);
        EXPECT_LE(stats.peak_retained, stats.max_depth + stats.max_batch);
        EXPECT_EQ(stats.store_size, 0u);
    }
}

TEST(EnumerateLargeRs, StopsWhenSinkReturnsFalse) {
    Graph g = complete_with_pendants(2);
    int seen = 0;
    auto stats = enumerate_large_rs(g, 0, [&](const Matching&) { return ++seen < 4; });
    EXPECT_EQ(seen, 4);
    EXPECT_TRUE(stats.stopped);
}
