#include <gtest/gtest.h>

#include <random>

#include "frozencol/families.hpp"
#include "frozencol/graph.hpp"
#include "frozencol/io.hpp"
#include "frozencol/isomorphism.hpp"
#include "frozencol/patterns.hpp"
#include "oracles.hpp"

using namespace frozencol;

namespace {

int vid(const Graph& g, const char* name) { return g.find_label(name); }

}  // namespace

TEST(Graph, FromEdgesBuildsCycle) {
    Graph c4 = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_EQ(c4.edge_count(), 4);
    EXPECT_EQ(c4, cycle_graph(4));
}

TEST(Graph, DuplicateEdgesCollapse) { EXPECT_EQ(graph_from_edges(3, {{0, 1}, {0, 1}, {1, 0}}).edge_count(), 1); }

TEST(Graph, RejectsBadEdges) {
    EXPECT_THROW(graph_from_edges(3, {{0, 3}}), InvalidInput);
    EXPECT_THROW(graph_from_edges(3, {{-1, 2}}), InvalidInput);
    EXPECT_THROW(graph_from_edges(3, {{1, 1}}), InvalidInput);
}

TEST(Graph, LabelsMustBeUniqueAndComplete) {
    EXPECT_THROW(graph_from_edges(2, {}, {"a"}), InvalidInput);
    EXPECT_THROW(graph_from_edges(2, {}, {"a", "a"}), InvalidInput);
    Graph g = graph_from_edges(2, {{0, 1}}, {"a", "b"});
    EXPECT_EQ(g.find_label("b"), 1);
}

TEST(Graph, MeTwoComplementHasFourteenEdges) {
    Graph g = me_complement(2).graph;
    EXPECT_EQ(g.order(), 10);
    EXPECT_EQ(g.edge_count(), 14);
    EXPECT_EQ(complement(g).edge_count(), 31);
}

TEST(Graph, ComplementExamples) {
    EXPECT_EQ(complement(graph_from_edges(4, {{0, 1}, {2, 3}})).edge_count(), 4);
    EXPECT_TRUE(oracle::isomorphic(complement(graph_from_edges(4, {{0, 1}, {2, 3}})), cycle_graph(4)));
    EXPECT_EQ(complement(complete_graph(3)).edge_count(), 0);
}

TEST(Graph, SymmetricIrreflexiveAndComplementInvolution) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(1 + trial % 20, 0.4, rng);
        for (int u = 0; u < g.order(); ++u) {
            EXPECT_FALSE(g.adjacent(u, u));
            for (int v = 0; v < g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        }
        Graph h = complement(g);
        EXPECT_EQ(g.edge_count() + h.edge_count(), g.order() * (g.order() - 1) / 2);
        EXPECT_EQ(complement(h), g);
    }
}

TEST(Graph, MultiWordRows) {
    Graph c = cycle_graph(130);
    EXPECT_EQ(c.edge_count(), 130);
    EXPECT_TRUE(c.adjacent(129, 0));
    EXPECT_EQ(complement(complement(c)), c);
    EXPECT_EQ(decode_graph6(encode_graph6(c)), c);
}

TEST(Graph, JoinCounts) {
    EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
    EXPECT_EQ(join(complete_graph(2), complete_graph(2)), complete_graph(4));
    EXPECT_EQ(join(cycle_graph(5), cycle_graph(5)).edge_count(), 35);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(trial % 7 + 1, 0.5, rng);
        Graph h = oracle::random_graph(trial % 5 + 1, 0.5, rng);
        Graph j = join(g, h);
        EXPECT_EQ(j.edge_count(), g.edge_count() + h.edge_count() + g.order() * h.order());
        EXPECT_EQ(induced_subgraph(j, VertexSet::of(j.order(), std::vector<int>{0})).order(), 1);
    }
}

TEST(Patterns, FindsC4InC4) {
    auto s = find_induced(cycle_graph(4), Pattern::C4);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->size(), 4);
}

TEST(Patterns, MeTwoComplementIsC4Free) { EXPECT_FALSE(find_induced(me_complement(2).graph, Pattern::C4)); }

TEST(Patterns, MeStarTwoHasTheExpectedTwoK2) {
    Graph me_star = complement(me_star_complement(2).graph);
    auto s = find_induced(me_star, Pattern::TwoK2);
    ASSERT_TRUE(s);
    const Graph& comp = me_star_complement(2).graph;
    EXPECT_EQ(*s, VertexSet::of(10, {vid(comp, "u0"), vid(comp, "u1"), vid(comp, "u2"), vid(comp, "u3")}));
}

TEST(Patterns, AgreeWithBruteForce) {
    std::mt19937_64 rng(2024);
    const Pattern all[] = {Pattern::C4, Pattern::TwoK2, Pattern::P4, Pattern::P5, Pattern::K3, Pattern::Diamond};
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + trial % 9;
        Graph g = oracle::random_graph(n, 0.15 + 0.1 * (trial % 7), rng);
        for (Pattern p : all) {
            auto found = find_induced(g, p);
            const Graph pg = pattern_graph(p);
            EXPECT_EQ(found.has_value(), oracle::contains_induced(g, pg)) << to_string(p) << " " << encode_graph6(g);
            if (found) {
                EXPECT_TRUE(oracle::induces(g, found->members(), pg));
            }
        }
    }
}

TEST(Patterns, ParseRoundTrip) {
    for (auto p : {Pattern::C4, Pattern::TwoK2, Pattern::P4, Pattern::P5, Pattern::K3, Pattern::Diamond})
        EXPECT_EQ(parse_pattern(to_string(p)), p);
    EXPECT_THROW(parse_pattern("C5"), InvalidInput);
}

TEST(Triangles, MeTwoHasOnlyTheTwoBuiltTriangles) {
    const Graph g = me_complement(2).graph;
    auto t = triangles(g);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0], VertexSet::of(10, {vid(g, "v11"), vid(g, "v12"), vid(g, "v13")}));
    EXPECT_EQ(t[1], VertexSet::of(10, {vid(g, "v21"), vid(g, "v22"), vid(g, "v23")}));
    EXPECT_TRUE(triangles(cycle_graph(4)).empty());
}

TEST(Triangles, KeTwoMatchesBruteForceCount) {
    const Graph g = ke_complement(2).graph;
    int count = 0;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++count;
    EXPECT_EQ(count, 4);
    EXPECT_EQ(static_cast<int>(triangles(g).size()), count);
}

TEST(Diamond, MiddleEdge) {
    Graph d = pattern_graph(Pattern::Diamond);
    EXPECT_TRUE(is_diamond_middle_edge(d, 1, 2));
    EXPECT_FALSE(is_diamond_middle_edge(d, 0, 1));
    EXPECT_FALSE(is_diamond_middle_edge(d, 2, 3));
    EXPECT_THROW(is_diamond_middle_edge(d, 0, 3), InvalidInput);
    const Graph g = me_complement(2).graph;
    EXPECT_FALSE(is_diamond_middle_edge(g, vid(g, "u1"), vid(g, "u2")));
}

TEST(Isomorphism, Examples) {
    auto m = are_isomorphic(h_t_complement(3).graph, km_complement(2).graph);
    ASSERT_TRUE(m);
    EXPECT_TRUE(is_isomorphism(h_t_complement(3).graph, km_complement(2).graph, *m));
    EXPECT_FALSE(are_isomorphic(cycle_graph(4), graph_from_edges(4, {{0, 1}, {2, 3}})));
    EXPECT_TRUE(are_isomorphic(path_graph(4), permuted(path_graph(4), {3, 2, 1, 0})));
    EXPECT_THROW(are_isomorphic(cycle_graph(21), cycle_graph(21)), LimitExceeded);
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 5;
        Graph g = oracle::random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = trial % 2 == 0 ? permuted(g, perm) : oracle::random_graph(n, 0.5, rng);
        EXPECT_EQ(are_isomorphic(g, h).has_value(), oracle::isomorphic(g, h));
    }
}

TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(encode_graph6(empty_graph(1)), "@");
    EXPECT_EQ(encode_graph6(empty_graph(0)), "?");
    // Standard example: the 5-vertex graph with edges 02, 04, 13, 34.
    EXPECT_EQ(encode_graph6(graph_from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})), "DQc");
    EXPECT_THROW(decode_graph6("junk~~~"), InvalidInput);
    EXPECT_THROW(decode_graph6("D"), InvalidInput);
    EXPECT_THROW(decode_graph6("DQd"), InvalidInput);
    EXPECT_EQ(decode_graph6(">>graph6<<DQc\n"), graph_from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
}

TEST(Graph6, RoundTripRandom) {
    std::mt19937_64 rng(3);
    for (int n = 0; n <= 30; ++n) {
        Graph g = oracle::random_graph(n, 0.3, rng);
        EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
    }
    Graph me = me_complement(2).graph;
    EXPECT_EQ(decode_graph6(encode_graph6(me)), me);
}

TEST(Dimacs, RoundTripAndErrors) {
    Graph g = me_complement(3).graph;
    EXPECT_EQ(read_dimacs(write_dimacs(g)), g);
    EXPECT_EQ(read_dimacs("c hello\np edge 3 1\ne 1 3\n"), graph_from_edges(3, {{0, 2}}));
    EXPECT_THROW(read_dimacs("e 1 2\n"), InvalidInput);
    EXPECT_THROW(read_dimacs("p edge 2 1\ne 1 3\n"), InvalidInput);
    EXPECT_THROW(read_dimacs("x\n"), InvalidInput);
}

TEST(Json, GraphRoundTripKeepsLabels) {
    Graph g = me_complement(2).graph;
    Graph back = graph_from_json(graph_to_json(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.labels(), g.labels());
    EXPECT_THROW(graph_from_json(nlohmann::json{{"edges", 1}}), InvalidInput);
}
