#include <gtest/gtest.h>

#include <sstream>

#include <ftrails/substitute.hpp>

#include "helpers.hpp"

using namespace ftrails;
using testutil::make;

namespace {

// 0 = a, blossom {1 = β, 2}, 3 = m, 4 = u.  η = 0-1.
Instance light_instance() {
    // e0 η matched, e1 internal, e2 Bm 2-3, e3 Bu 2-4, e4 outside 3-4
    return make(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}, {1, 1, 1, 1, 1}, {0, 2});
}

WeightedBlossom light_blossom() { return {{1, 2}, 1, EdgeId{0}, BlossomKind::light}; }

bool joins(const Edge& e, VertexId a, VertexId b) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); }

} // namespace

TEST(BuildSubstitute, LightWiring) {
    auto inst = light_instance();
    auto s = build_substitute(inst.g, inst.f, inst.m, {light_blossom()});
    ASSERT_EQ(s.map.blossoms.size(), 1u);
    VertexId b = s.map.blossoms[0].shadow;
    EXPECT_EQ(b, 5u);
    EXPECT_EQ(s.f[1], 1);
    EXPECT_EQ(s.f[b], 1);
    EXPECT_EQ(s.f[2], 0);
    EXPECT_EQ(s.map.edge_map[1], npos32); // internal edge dropped
    EXPECT_TRUE(joins(s.g.edge(s.map.edge_map[0]), 0, 1)); // η keeps β
    EXPECT_TRUE(joins(s.g.edge(s.map.edge_map[2]), b, 3)); // Bm -> b-m
    EXPECT_TRUE(joins(s.g.edge(s.map.edge_map[3]), 1, 4)); // Bu -> β-u
    EXPECT_TRUE(joins(s.g.edge(s.map.edge_map[4]), 3, 4));
    EdgeId bb = s.map.blossoms[0].beta_b;
    EXPECT_TRUE(joins(s.g.edge(bb), 1, b));
    EXPECT_FALSE(s.m.contains(bb));
    EXPECT_TRUE(s.m.contains(s.map.edge_map[0]));
    EXPECT_TRUE(s.m.contains(s.map.edge_map[2]));
    EXPECT_EQ(s.m.size(), 2u);
}

TEST(BuildSubstitute, HeavyWiring) {
    // e0 η unmatched 0-1, e1 internal matched, e2 Bu 2-4, e3 Bu 1-3
    auto inst = make(5, {{0, 1}, {1, 2}, {2, 4}, {1, 3}}, {1, 1, 1, 1, 1}, {1});
    auto s = build_substitute(inst.g, inst.f, inst.m, {{{1, 2}, 1, EdgeId{0}, BlossomKind::heavy}});
    VertexId b = s.map.blossoms[0].shadow;
    EXPECT_TRUE(joins(s.g.edge(s.map.edge_map[0]), 0, 1));
    EXPECT_TRUE(joins(s.g.edge(s.map.edge_map[2]), b, 4));
    EXPECT_TRUE(joins(s.g.edge(s.map.edge_map[3]), b, 3));
    EXPECT_TRUE(s.m.contains(s.map.blossoms[0].beta_b));
    EXPECT_EQ(s.m.size(), 1u);
}

TEST(BuildSubstitute, EmptyListIsIdentity) {
    auto inst = light_instance();
    auto s = build_substitute(inst.g, inst.f, inst.m, {});
    EXPECT_EQ(s.g.num_vertices(), inst.g.num_vertices());
    ASSERT_EQ(s.g.num_edges(), inst.g.num_edges());
    for (EdgeId e = 0; e < inst.g.num_edges(); ++e) {
        EXPECT_EQ(s.map.edge_map[e], e);
        EXPECT_TRUE(joins(s.g.edge(e), inst.g.edge(e).u, inst.g.edge(e).v));
    }
    EXPECT_EQ(s.f, inst.f);
    EXPECT_EQ(s.m, inst.m);
}

TEST(BuildSubstitute, RejectsInconsistentInput) {
    auto inst = light_instance();
    auto wb = light_blossom();
    auto heavy = wb;
    heavy.kind = BlossomKind::heavy; // η is matched, heavy needs it unmatched
    EXPECT_THROW(build_substitute(inst.g, inst.f, inst.m, {heavy}), InputError);
    heavy.eta.reset();
    EXPECT_THROW(build_substitute(inst.g, inst.f, inst.m, {heavy}), InputError);
    auto off = wb;
    off.base = 0;
    EXPECT_THROW(build_substitute(inst.g, inst.f, inst.m, {off}), InputError);
    EXPECT_THROW(build_substitute(inst.g, inst.f, inst.m, {wb, {{2, 3}, 3, std::nullopt, BlossomKind::light}}),
                 InputError);
    auto wrong_eta = wb;
    wrong_eta.eta = 4;
    EXPECT_THROW(build_substitute(inst.g, inst.f, inst.m, {wrong_eta}), InputError);
    // two matched edges leaving a light blossom overload the shadow
    auto two = make(4, {{0, 2}, {1, 3}}, {1, 1, 1, 1}, {0, 1});
    EXPECT_THROW(build_substitute(two.g, two.f, two.m, {{{0, 1}, 0, std::nullopt, BlossomKind::light}}), InputError);
}

TEST(PullBack, AvoidingTheBlossomIsIdentity) {
    auto inst = light_instance();
    auto s = build_substitute(inst.g, inst.f, inst.m, {light_blossom()});
    GTrail t{3, {{s.map.edge_map[4], 3, 4}}};
    auto p = pull_back_trail(s.g, t, s.map);
    EXPECT_EQ(p.edges, (std::vector<EdgeId>{4}));
    EXPECT_TRUE(p.crossings.empty());
}

TEST(PullBack, ThroughShadowOfLightBlossom) {
    auto inst = light_instance();
    auto s = build_substitute(inst.g, inst.f, inst.m, {light_blossom()});
    VertexId b = s.map.blossoms[0].shadow;
    GTrail t{0, {{s.map.edge_map[0], 0, 1}, {s.map.blossoms[0].beta_b, 1, b}, {s.map.edge_map[2], b, 3}}};
    auto p = pull_back_trail(s.g, t, s.map);
    EXPECT_EQ(p.edges, (std::vector<EdgeId>{0, 2}));
    ASSERT_EQ(p.crossings.size(), 1u);
    EXPECT_EQ(p.crossings[0].entry, 0u);
    EXPECT_EQ(p.crossings[0].exit, 2u);
    EXPECT_TRUE(p.crossings[0].via_shadow);
}

TEST(PullBack, RejectsBetaUWithShadowEdge) {
    auto inst = light_instance();
    auto s = build_substitute(inst.g, inst.f, inst.m, {light_blossom()});
    VertexId b = s.map.blossoms[0].shadow;
    GTrail t{4, {{s.map.edge_map[3], 4, 1}, {s.map.blossoms[0].beta_b, 1, b}, {s.map.edge_map[2], b, 3}}};
    EXPECT_THROW(pull_back_trail(s.g, t, s.map), StructuralError);
    // ending at the shadow has no counterpart in G
    GTrail dangling{0, {{s.map.edge_map[0], 0, 1}, {s.map.blossoms[0].beta_b, 1, b}}};
    EXPECT_THROW(pull_back_trail(s.g, dangling, s.map), StructuralError);
}

TEST(BlossomList, Parse) {
    std::istringstream in("c two blossoms\nB light 2 0 2 3\nB heavy 5 - 5 6 7\n");
    auto list = parse_blossom_list(in);
    ASSERT_EQ(list.size(), 2u);
    EXPECT_EQ(list[0].kind, BlossomKind::light);
    EXPECT_EQ(list[0].base, 1u);
    EXPECT_EQ(list[0].eta, std::optional<EdgeId>(0));
    EXPECT_EQ(list[0].vertices, (std::vector<VertexId>{1, 2}));
    EXPECT_EQ(list[1].kind, BlossomKind::heavy);
    EXPECT_FALSE(list[1].eta);
    std::istringstream bad("B medium 1 - 1\n");
    EXPECT_THROW(parse_blossom_list(bad), InputError);
    std::istringstream bad_eta("B light 1 x1 1\n");
    EXPECT_THROW(parse_blossom_list(bad_eta), InputError);
}
