#include <gtest/gtest.h>

#include <random>

#include "frozencol/families.hpp"
#include "frozencol/io.hpp"
#include "frozencol/reconfig.hpp"
#include "oracles.hpp"

using namespace frozencol;

namespace {

Graph star(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return std::move(b).build();
}

}  // namespace

TEST(Reconfig, EnumerationCounts) {
    EXPECT_EQ(enumerate_colourings(complete_graph(3), 3).size(), 6u);
    EXPECT_EQ(enumerate_colourings(cycle_graph(4), 2).size(), 2u);
    EXPECT_EQ(enumerate_colourings(path_graph(3), 3).size(), 12u);
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= k; ++n) {
            std::size_t falling = 1;
            for (int i = 0; i < n; ++i) falling *= static_cast<std::size_t>(k - i);
            EXPECT_EQ(enumerate_colourings(complete_graph(n), k).size(), falling) << n << " " << k;
        }
    EXPECT_THROW(enumerate_colourings(empty_graph(10), 3, 100), LimitExceeded);
}

TEST(Reconfig, EnumerationIsLexicographic) {
    auto all = enumerate_colourings(path_graph(3), 3);
    auto expected = oracle::all_colourings(path_graph(3), 3);
    ASSERT_EQ(all.size(), expected.size());
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].colours(), expected[i]);
}

TEST(Reconfig, ComponentExamples) {
    auto k3 = reconfiguration_components(complete_graph(3), 3);
    EXPECT_EQ(k3.component_count, 6);
    EXPECT_EQ(k3.frozen_colourings.size(), 6u);
    auto c6 = reconfiguration_components(cycle_graph(6), 3);
    EXPECT_GE(c6.frozen_colourings.size(), 6u);
    auto p3 = reconfiguration_components(path_graph(3), 3);
    EXPECT_EQ(p3.component_count, 1);
    EXPECT_TRUE(p3.frozen_colourings.empty());
}

TEST(Reconfig, MixingExamples) {
    EXPECT_FALSE(is_k_mixing(complement(me_complement(2).graph), 5));
    EXPECT_TRUE(is_k_mixing(path_graph(3), 3));
    EXPECT_FALSE(is_k_mixing(complete_graph(3), 3));
    EXPECT_TRUE(is_k_mixing(complete_graph(3), 2));  // no colourings at all
}

TEST(Reconfig, DiameterExamples) {
    auto k2 = recolouring_diameter(complete_graph(2), 3);
    ASSERT_EQ(k2.size(), 1u);
    EXPECT_LE(k2[0], 8);
    // Swapping the two colours on K_2 needs the spare colour: three moves.
    EXPECT_EQ(k2[0], 3);
    auto s = recolouring_diameter(star(3), 3);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_LE(s[0], 16);
    auto c5 = recolouring_diameter(cycle_graph(5), 4);
    ASSERT_EQ(c5.size(), 1u);
    EXPECT_LE(c5[0], 70);
}

TEST(Reconfig, FindFrozenExamples) {
    auto c6 = find_frozen(cycle_graph(6), 3);
    ASSERT_TRUE(c6);
    EXPECT_TRUE(is_frozen_colouring(cycle_graph(6), *c6));
    EXPECT_FALSE(find_frozen(cycle_graph(8), 3));
    Graph me2 = complement(me_complement(2).graph);
    auto f = find_frozen(me2, 5);
    ASSERT_TRUE(f);
    EXPECT_TRUE(is_frozen_colouring(me2, *f));
}

TEST(Reconfig, FindFrozenAgreesWithEnumeration) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + trial % 6;
        Graph g = oracle::random_graph(n, 0.3 + 0.5 * (trial % 3) / 2.0, rng);
        for (int k = 1; k <= 4; ++k) {
            auto r = reconfiguration_components(g, k);
            EXPECT_EQ(find_frozen(g, k).has_value(), !r.frozen_colourings.empty()) << encode_graph6(g) << " k=" << k;
        }
    }
}

TEST(Reconfig, RecolourableProbe) {
    auto c5 = recolourable_up_to(cycle_graph(5), 5);
    ASSERT_EQ(c5.size(), 2u);
    EXPECT_EQ(c5[0].k, 4);
    EXPECT_EQ(c5[0].mixing, true);
    EXPECT_EQ(c5[1].mixing, true);
    auto me = recolourable_up_to(complement(me_complement(2).graph), 5);
    ASSERT_EQ(me.size(), 1u);
    EXPECT_EQ(me[0].mixing, false);
    auto p4 = recolourable_up_to(path_graph(4), 4);
    ASSERT_EQ(p4.size(), 2u);
    EXPECT_EQ(p4[0].mixing, true);
    EXPECT_EQ(p4[1].mixing, true);
    auto capped = recolourable_up_to(cycle_graph(5), 4, {.max_colourings = 10});
    ASSERT_EQ(capped.size(), 1u);
    EXPECT_FALSE(capped[0].mixing.has_value());
    EXPECT_FALSE(capped[0].note.empty());
}

TEST(Reconfig, FrozenIffIsolatedAndReportInvariants) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + trial % 7;
        Graph g = oracle::random_graph(n, 0.5, rng);
        for (int k = 1; k <= 4; ++k) {
            auto r = reconfiguration_components(g, k);
            std::int64_t total = 0;
            for (auto s : r.component_sizes) total += s;
            EXPECT_EQ(total, r.colouring_count);
            std::size_t isolated = 0;
            for (const auto& c : oracle::all_colourings(g, k)) {
                bool frozen = is_frozen_colouring(g, BlockPartition::from_colours(c, k));
                bool iso = oracle::reconfig_degree(g, c, k) == 0;
                EXPECT_EQ(frozen, iso);
                isolated += iso;
            }
            EXPECT_EQ(isolated, r.frozen_colourings.size());
            for (const auto& p : r.frozen_colourings) EXPECT_TRUE(is_frozen_colouring(g, p));
        }
    }
}

TEST(Reconfig, FamilyCertificatesAreIsolated) {
    for (auto fam : {Family::ME, Family::KM, Family::B}) {
        auto inst = build_family(fam, fam == Family::B ? 3 : 2);
        ASSERT_TRUE(inst.frozen);
        Graph g = complement(inst.graph);
        const int k = inst.frozen->block_count();
        EXPECT_EQ(oracle::reconfig_degree(g, inst.frozen->colours(), k), 0) << to_string(fam);
    }
}

TEST(Reconfig, UnionCapTruncates) {
    auto r = reconfiguration_components(cycle_graph(5), 4, {.max_unions = 5});
    EXPECT_TRUE(r.truncated);
    EXPECT_THROW(is_k_mixing(cycle_graph(5), 4, {.max_unions = 5}), LimitExceeded);
}

TEST(Reconfig, JsonAndDot) {
    auto j = reconfig_to_json(reconfiguration_components(complete_graph(2), 2, {}, true));
    EXPECT_EQ(j["colouring_count"], 2);
    EXPECT_EQ(j["component_count"], 2);
    EXPECT_EQ(j["mixing"], false);
    EXPECT_TRUE(j["diameter"].is_null());
    auto dot = reconfig_dot(complete_graph(2), 3);
    EXPECT_NE(dot.find("graph R3"), std::string::npos);
    EXPECT_NE(dot.find(" -- "), std::string::npos);
    EXPECT_THROW(reconfig_dot(empty_graph(10), 3), LimitExceeded);
}

TEST(Reconfig, EmptyGraphHasOneColouringAndNoFrozen) {
    auto r = reconfiguration_components(empty_graph(0), 3);
    EXPECT_EQ(r.colouring_count, 1);
    EXPECT_EQ(r.component_count, 1);
    EXPECT_TRUE(r.frozen_colourings.empty());
}
