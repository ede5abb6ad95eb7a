#include <gtest/gtest.h>

#include <ftrails/driver.hpp>
#include <ftrails/oracle.hpp>

#include "helpers.hpp"

using namespace ftrails;
using testutil::make;

TEST(MaxFMatching, Path) {
    auto inst = make(3, {{0, 1}, {1, 2}});
    auto rep = max_f_matching(inst.g, inst.f, inst.m);
    EXPECT_EQ(rep.matching.size(), 1u);
    EXPECT_TRUE(rep.certificate.ok());
}

TEST(MaxFMatching, ParallelEdgesBothMatched) {
    auto inst = make(2, {{0, 1}, {0, 1}}, {2, 2});
    EXPECT_EQ(max_f_matching(inst.g, inst.f, inst.m).matching.size(), 2u);
}

TEST(MaxFMatching, Petersen) {
    auto inst = testutil::petersen();
    SolveOptions opt;
    opt.check = true;
    auto rep = max_f_matching(inst.g, inst.f, inst.m, opt);
    EXPECT_EQ(rep.matching.size(), 5u);
    EXPECT_TRUE(rep.certificate.ok());
    EXPECT_EQ(rep.certificate.bound.value, 5);
}

TEST(MaxFMatching, PhasesGrowStrictly) {
    std::mt19937_64 rng(73);
    for (int it = 0; it < 300; ++it) {
        auto inst = testutil::random_instance(rng, 8, 14, 3);
        auto rep = max_f_matching(inst.g, inst.f, inst.m);
        std::size_t prev = inst.m.size();
        for (std::size_t k = 0; k + 1 < rep.phases.size(); ++k) {
            EXPECT_GT(rep.phases[k].size_after, prev);
            prev = rep.phases[k].size_after;
        }
        EXPECT_EQ(rep.phases.back().trails, 0u);
    }
}

TEST(MaxFMatching, MatchesBruteForce) {
    std::mt19937_64 rng(79);
    for (int it = 0; it < 800; ++it) {
        auto inst = testutil::random_instance(rng, 8, 14, 3);
        SolveOptions opt;
        opt.verify_every_phase = true;
        auto rep = max_f_matching(inst.g, inst.f, inst.m, opt);
        EXPECT_EQ(rep.matching.size(), oracle::brute_max(inst.g, inst.f));
        EXPECT_TRUE(rep.certificate.ok());
        validate_matching(inst.g, inst.f, rep.matching);
    }
}

TEST(MaxFMatching, LargerInstancesCertify) {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 30; ++it) {
        auto inst = generate(200, 600, 3, rng());
        auto rep = max_f_matching(inst.g, inst.f, inst.m);
        EXPECT_TRUE(rep.certificate.ok()) << rep.certificate.failures.front();
        EXPECT_EQ(rep.certificate.bound.value, std::int64_t(rep.matching.size()));
    }
}
