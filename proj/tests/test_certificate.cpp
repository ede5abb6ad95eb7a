#include <gtest/gtest.h>

#include <ftrails/certificate.hpp>
#include <ftrails/engine.hpp>
#include <ftrails/expand.hpp>
#include <ftrails/oracle.hpp>

#include "helpers.hpp"

using namespace ftrails;
using testutil::make;

namespace {

struct Phase {
    BlockingResult r;
    std::vector<GTrail> trails;
};

Phase phase(const Instance& inst) {
    Phase p{find_trails(inst.g, inst.f, inst.m), {}};
    p.trails = expand_all(p.r);
    return p;
}

std::vector<std::uint8_t> mask(std::size_t n, std::initializer_list<VertexId> vs) {
    std::vector<std::uint8_t> m(n, 0);
    for (VertexId v : vs) m[v] = 1;
    return m;
}

} // namespace

TEST(BoundValue, Triangle) {
    auto t = make(3, {{0, 1}, {1, 2}, {2, 0}});
    auto bv = bound_value(t.g, t.f, mask(3, {}), mask(3, {}));
    EXPECT_EQ(bv.value, 1);
    EXPECT_EQ(bv.components.size(), 1u);
}

TEST(BoundValue, StarWithCenterInI) {
    auto s = make(4, {{0, 1}, {0, 2}, {0, 3}});
    auto bv = bound_value(s.g, s.f, mask(4, {0}), mask(4, {}));
    EXPECT_EQ(bv.value, 1);
    EXPECT_EQ(bv.components.size(), 3u);
}

TEST(BoundValue, EmptyGraphAndOverlap) {
    Multigraph g(0);
    EXPECT_EQ(bound_value(g, {}, {}, {}).value, 0);
    auto t = make(2, {{0, 1}});
    EXPECT_THROW(bound_value(t.g, t.f, mask(2, {0}), mask(2, {0})), InputError);
}

TEST(BoundValue, LoopsAtOCount) {
    auto t = make(1, {{0, 0}}, {2});
    EXPECT_EQ(bound_value(t.g, t.f, mask(1, {}), mask(1, {0})).value, 1);
}

// |N| <= bound for every (I,O) and every f-matching N
TEST(BoundValue, WeakDuality) {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 2000; ++it) {
        auto inst = testutil::random_instance(rng, 7, 12, 3);
        const std::size_t n = inst.g.num_vertices();
        std::vector<std::uint8_t> in_i(n, 0), in_o(n, 0);
        for (VertexId v = 0; v < n; ++v) {
            auto c = rng() % 3;
            in_i[v] = c == 1;
            in_o[v] = c == 2;
        }
        auto bv = bound_value(inst.g, inst.f, in_i, in_o);
        EXPECT_GE(bv.value, std::int64_t(oracle::brute_max(inst.g, inst.f)));
    }
}

TEST(ResidualGraph, NoTrailsMeansWholeGraph) {
    auto inst = make(3, {{0, 1}, {1, 2}}, {}, {0});
    auto p = phase(inst);
    ASSERT_TRUE(p.trails.empty());
    auto rg = residual_graph(inst.g, inst.m, p.r, p.trails);
    for (auto h : rg.has_edge) EXPECT_TRUE(h);
    EXPECT_EQ(rg.f, inst.f);
    EXPECT_EQ(rg.m, inst.m);
}

TEST(ResidualGraph, SingleEdgeAfterAugment) {
    auto inst = make(2, {{0, 1}});
    auto p = phase(inst);
    auto rg = residual_graph(inst.g, inst.m, p.r, p.trails);
    EXPECT_FALSE(rg.has_edge[0]);
    auto c = verify(inst.g, inst.m, p.r, p.trails);
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.bound.value, 0);
    EXPECT_EQ(c.residual_size, 0u);
}

// Trail edges that lie in a maximal complete blossom go back into RG.
TEST(ResidualGraph, CompleteBlossomEdgesStay) {
    std::mt19937_64 rng(71);
    std::size_t restored = 0;
    for (int it = 0; it < 3000 && restored == 0; ++it) {
        auto inst = testutil::random_instance(rng, 8, 14, 3);
        auto p = phase(inst);
        auto rg = residual_graph(inst.g, inst.m, p.r, p.trails);
        std::vector<std::uint8_t> on_trail(inst.g.num_edges(), 0);
        for (const auto& t : p.trails)
            for (const auto& s : t.steps) on_trail[s.edge] = 1;
        const auto& F = p.r.forest;
        for (NodeId v = 0; v < F.num_nodes(); ++v) {
            BlossomId b = rg.maximal_complete[v];
            if (b == npos32 || v == F.blossoms[b].base) continue;
            EXPECT_TRUE(rg.has_edge[F.edge[v]]);
            restored += on_trail[F.edge[v]];
        }
        for (EdgeId e = 0; e < inst.g.num_edges(); ++e) {
            if (!on_trail[e]) {
                EXPECT_TRUE(rg.has_edge[e]);
            }
        }
    }
    EXPECT_GT(restored, 0u);
}

TEST(Labels, Cases) {
    // 0 isolated free; 1-2 matched and never reached; triangle 3,4,5 with 4-5 matched
    auto inst = make(6, {{1, 2}, {3, 4}, {4, 5}, {5, 3}}, {}, {0, 2});
    auto p = phase(inst);
    auto rg = residual_graph(inst.g, inst.m, p.r, p.trails);
    auto labels = compute_labels(p.r, rg);
    EXPECT_EQ(labels[0], Label::outer);
    EXPECT_EQ(labels[1], Label::orphan);
    EXPECT_EQ(labels[2], Label::orphan);
    EXPECT_EQ(labels[3], Label::in_complete_blossom);
    EXPECT_EQ(labels[4], Label::in_complete_blossom);
    auto c = verify(inst.g, inst.m, p.r, p.trails);
    EXPECT_TRUE(c.ok());
}

TEST(Labels, InnerVertex) {
    // path 0-1=2 with 0 free: 1 is reached by an unmatched edge
    auto inst = make(3, {{0, 1}, {1, 2}}, {}, {1});
    auto p = phase(inst);
    auto rg = residual_graph(inst.g, inst.m, p.r, p.trails);
    auto labels = compute_labels(p.r, rg);
    EXPECT_EQ(labels[0], Label::outer);
    EXPECT_EQ(labels[1], Label::inner);
    EXPECT_EQ(labels[2], Label::outer);
    EXPECT_TRUE(verify(inst.g, inst.m, p.r, p.trails).ok());
}

// A search stopped before its blossom formed leaves an unmatched O-O edge.
TEST(Verify, TruncatedRunDoesNotVerify) {
    auto inst = make(3, {{0, 1}, {1, 2}, {2, 0}}, {}, {1});
    BlockingResult r;
    r.def_before = deficiency(inst.g, inst.f, inst.m);
    r.def_after = r.def_before;
    r.e1.assign(3, {});
    for (auto& e : r.e1) {
        e.set = true;
        e.type = MType::matched;
    }
    auto c = verify(inst.g, inst.m, r, {});
    EXPECT_FALSE(c.ok());
}

TEST(Verify, RandomInstancesAreTight) {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 800; ++it) {
        auto inst = testutil::random_instance(rng, 6, 12, 3);
        auto p = phase(inst);
        auto c = verify(inst.g, inst.m, p.r, p.trails);
        EXPECT_TRUE(c.ok()) << (c.failures.empty() ? "" : c.failures.front());
        auto rg = residual_graph(inst.g, inst.m, p.r, p.trails);
        EXPECT_EQ(c.bound.value, std::int64_t(oracle::brute_max(rg.subgraph(inst.g), rg.f)));
    }
}
