#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace mmenum;
using namespace mmenum::testing;

TEST(ParseGraph, PathHasLexicographicEdgeIds) {
    Graph g = parse_graph("0 1\n1 2");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
    EXPECT_EQ(g.edge(1), (Edge{1, 2}));
}

TEST(ParseGraph, RejectsSelfLoop) {
    try {
        parse_graph("0 0");
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
}

TEST(ParseGraph, RejectsDuplicateInEitherOrientation) {
    try {
        parse_graph("0 1\n1 0");
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
    }
}

TEST(ParseGraph, SkipsCommentsAndBlankLines) {
    Graph g = parse_graph("# header\n\n  3 7  \n# more\n7 9\n");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.label(0), 3);
    EXPECT_EQ(g.label(2), 9);
    EXPECT_EQ(g.find_vertex(7), std::optional<Vertex>(1));
    EXPECT_FALSE(g.find_vertex(4).has_value());
}

TEST(ParseGraph, RejectsMalformedLines) {
    EXPECT_THROW(parse_graph("0 1 2"), parse_error);
    EXPECT_THROW(parse_graph("0"), parse_error);
    EXPECT_THROW(parse_graph("a b"), parse_error);
    EXPECT_THROW(parse_graph("-1 2"), parse_error);
    EXPECT_THROW(parse_graph("1 2x"), parse_error);
}

TEST(ParseGraph, ErrorReportsLineNumber) {
    try {
        parse_graph("0 1\n# c\n1 2\nbad line here\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 4u);
    }
}

TEST(ParseGraph, EmptyInputGivesEmptyGraph) {
    Graph g = parse_graph("# nothing\n");
    EXPECT_EQ(g.vertex_count(), 0);
    EXPECT_EQ(g.edge_count(), 0);
}

TEST(FromEdges, RejectsSelfLoopAndDuplicate) {
    EXPECT_THROW(Graph::from_edges({{1, 1}}), usage_error);
    EXPECT_THROW(Graph::from_edges({{1, 2}, {2, 1}}), usage_error);
}

TEST(GammaVertex, Examples) {
    Graph tri = triangle();
    EXPECT_EQ(gamma_vertex(tri, 0), (std::vector<EdgeId>{*tri.find_edge(0, 1), *tri.find_edge(0, 2)}));
    Graph p = path_graph(3);
    EXPECT_EQ(gamma_vertex(p, 1), (std::vector<EdgeId>{0, 1}));
    EXPECT_EQ(gamma_vertex(p, 0), (std::vector<EdgeId>{0}));
    EXPECT_THROW(gamma_vertex(p, 3), usage_error);
}

TEST(GammaEdge, Examples) {
    Graph tri = triangle();
    for (EdgeId e = 0; e < 3; ++e) {
        auto gam = gamma_edge(tri, e);
        EXPECT_EQ(gam.size(), 2u);
        EXPECT_EQ(std::count(gam.begin(), gam.end(), e), 0);
    }
    Graph p = path_graph(4);
    EXPECT_EQ(gamma_edge(p, 1), (std::vector<EdgeId>{0, 2}));
    Graph s = star_graph(3);
    for (EdgeId e = 0; e < 3; ++e) {
        auto gam = gamma_edge(s, e);
        EXPECT_EQ(gam.size(), 2u);
        EXPECT_EQ(std::count(gam.begin(), gam.end(), e), 0);
    }
    EXPECT_THROW(gamma_edge(p, 3), usage_error);
}

TEST(GraphProperties, IncidenceGammaOrderRoundTrip) {
    for (const auto& [name, g] : corpus(200)) {
        SCOPED_TRACE(name);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            ASSERT_LT(ed.u, ed.v);
            auto gu = gamma_vertex(g, ed.u);
            auto gv = gamma_vertex(g, ed.v);
            EXPECT_TRUE(std::binary_search(gu.begin(), gu.end(), e));
            EXPECT_TRUE(std::binary_search(gv.begin(), gv.end(), e));
            std::set<EdgeId> expect(gu.begin(), gu.end());
            expect.insert(gv.begin(), gv.end());
            expect.erase(e);
            auto ge = gamma_edge(g, e);
            EXPECT_EQ(std::set<EdgeId>(ge.begin(), ge.end()), expect);
            EXPECT_TRUE(std::is_sorted(ge.begin(), ge.end()));
            if (e > 0) {
                EXPECT_LT(g.edge(e - 1), ed);
            }
            EXPECT_EQ(g.find_edge(ed.u, ed.v), std::optional<EdgeId>(e));
            EXPECT_EQ(g.find_edge(ed.v, ed.u), std::optional<EdgeId>(e));
        }
        EXPECT_EQ(parse_graph(to_string(g)), g);
    }
}

TEST(GraphProperties, LabelsSurviveRoundTrip) {
    Graph g = parse_graph("10 20\n20 5\n5 10\n100 5\n");
    EXPECT_EQ(to_string(g), "5 10\n5 20\n5 100\n10 20\n");
    EXPECT_EQ(parse_graph(to_string(g)), g);
    EXPECT_EQ(g.max_degree(), 3u);
}
