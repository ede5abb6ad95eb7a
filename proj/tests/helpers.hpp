#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include <ftrails/instance_io.hpp>
#include <ftrails/multigraph.hpp>

namespace testutil {

using namespace ftrails;

inline Instance make(std::size_t n, std::initializer_list<std::pair<int, int>> edges, DegreeBounds f = {},
                     std::initializer_list<EdgeId> matched = {}) {
    Instance inst;
    inst.g = Multigraph(n);
    for (auto [u, v] : edges) inst.g.add_edge(VertexId(u), VertexId(v));
    inst.f = f.empty() ? DegreeBounds(n, 1) : std::move(f);
    inst.m = Matching(inst.g.num_edges());
    for (EdgeId e : matched) inst.m.insert(e);
    return inst;
}

inline Instance petersen() {
    Instance inst;
    inst.g = Multigraph(10);
    for (int i = 0; i < 5; ++i) {
        inst.g.add_edge(VertexId(i), VertexId((i + 1) % 5));
        inst.g.add_edge(VertexId(i), VertexId(i + 5));
        inst.g.add_edge(VertexId(5 + i), VertexId(5 + (i + 2) % 5));
    }
    inst.f.assign(10, 1);
    inst.m = Matching(inst.g.num_edges());
    return inst;
}

// n in [1,nmax], m in [0,mmax], bounds in [1,fmax], random greedy matching half the time
inline Instance random_instance(std::mt19937_64& rng, std::size_t nmax, std::size_t mmax, int fmax) {
    std::size_t n = 1 + rng() % nmax, m = rng() % (mmax + 1);
    Instance inst = generate(n, m, 1 + int(rng() % std::uint64_t(fmax)), rng());
    if (rng() % 2) inst.m = random_greedy_matching(inst.g, inst.f, rng);
    return inst;
}

} // namespace testutil
