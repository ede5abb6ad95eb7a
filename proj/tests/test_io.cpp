#include <gtest/gtest.h>

#include <sstream>

#include <ftrails/driver.hpp>
#include <ftrails/instance_io.hpp>

using namespace ftrails;

TEST(ParseInstance, Basic) {
    auto inst = parse_instance_string("c demo\np ftrails 3 3\nf 2 2\ne 1 2\ne 2 3\ne 2 2\nm 0\n");
    EXPECT_EQ(inst.g.num_vertices(), 3u);
    EXPECT_EQ(inst.g.num_edges(), 3u);
    EXPECT_EQ(inst.f, (DegreeBounds{1, 2, 1}));
    EXPECT_TRUE(inst.m.contains(0));
    EXPECT_TRUE(inst.g.edge(2).is_loop());
}

TEST(ParseInstance, ErrorsCarryLineNumbers) {
    auto msg = [](const std::string& text) {
        try {
            parse_instance_string(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(msg("p ftrails 2\n").find("line 1"), std::string::npos);
    EXPECT_NE(msg("p ftrails 2 1\ne 1 3\n").find("line 2"), std::string::npos);
    EXPECT_NE(msg("e 1 2\n").find("line 1"), std::string::npos);
    EXPECT_NE(msg("p ftrails 2 1\nx\n").find("line 2"), std::string::npos);
    EXPECT_NE(msg("p ftrails 2 2\ne 1 2\n").find("promises"), std::string::npos);
    EXPECT_NE(msg("p ftrails 2 1\ne 1 2\nm 1\n").find("out of range"), std::string::npos);
    EXPECT_NE(msg("p ftrails 2 2\ne 1 2\ne 1 2\nm 0\nm 1\n").find("exceeds"), std::string::npos);
    EXPECT_NE(msg("").find("header"), std::string::npos);
    EXPECT_NE(msg("p graph 2 1\n").find("line 1"), std::string::npos);
}

TEST(WriteInstance, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance a = generate(6, 10, 3, seed);
        std::mt19937_64 rng(seed);
        a.m = random_greedy_matching(a.g, a.f, rng);
        std::ostringstream out;
        write_instance(out, a);
        Instance b = parse_instance_string(out.str());
        std::ostringstream again;
        write_instance(again, b);
        EXPECT_EQ(out.str(), again.str());
        EXPECT_EQ(a.f, b.f);
        EXPECT_EQ(a.m, b.m);
    }
}

TEST(Generate, DeterministicAndSolvable) {
    std::ostringstream a, b;
    write_instance(a, generate(6, 10, 3, 42));
    write_instance(b, generate(6, 10, 3, 42));
    EXPECT_EQ(a.str(), b.str());
    Instance inst = parse_instance_string(a.str());
    EXPECT_TRUE(max_f_matching(inst.g, inst.f, inst.m).certificate.ok());
    EXPECT_EQ(generate(4, 0, 1, 7).g.num_edges(), 0u);
    EXPECT_THROW(generate(0, 3, 1, 7), InputError);
}

TEST(Certificate, WriteAndParse) {
    auto inst = parse_instance_string("p ftrails 3 2\ne 1 2\ne 2 3\n");
    auto rep = max_f_matching(inst.g, inst.f, inst.m);
    std::ostringstream out;
    write_certificate(out, rep.certificate);
    std::istringstream in(out.str());
    auto cf = parse_certificate(in, 3);
    EXPECT_EQ(cf.inner, rep.certificate.inner);
    EXPECT_EQ(cf.outer, rep.certificate.outer);
    ASSERT_TRUE(cf.bound);
    EXPECT_EQ(*cf.bound, 1);
    std::istringstream bad("I 1\nO 4\n");
    EXPECT_THROW(parse_certificate(bad, 3), InputError);
    std::istringstream missing("I 1\n");
    EXPECT_THROW(parse_certificate(missing, 3), InputError);
}
