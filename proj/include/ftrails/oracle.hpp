#pragma once

// Exhaustive reference answers for small instances.  Slow on purpose.

#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "expand.hpp"
#include "multigraph.hpp"

namespace ftrails::oracle {

struct OracleLimit {
    std::size_t max_edges = 16;
    std::size_t max_trail_len = 16;
};

namespace detail {

inline void check_limit(const Multigraph& g, const OracleLimit& lim) {
    if (g.num_edges() > lim.max_edges)
        throw InputError("oracle limit exceeded: " + std::to_string(g.num_edges()) + " edges");
}

inline void best_subset(const Multigraph& g, EdgeId e, std::vector<int>& room, std::size_t cur, std::size_t& best) {
    if (cur + (g.num_edges() - e) <= best) return;
    if (e == g.num_edges()) {
        best = cur;
        return;
    }
    const Edge& ed = g.edge(e);
    bool fits = ed.is_loop() ? room[ed.u] >= 2 : (room[ed.u] >= 1 && room[ed.v] >= 1);
    if (fits) {
        --room[ed.u];
        --room[ed.v];
        best_subset(g, e + 1, room, cur + 1, best);
        ++room[ed.u];
        ++room[ed.v];
    }
    best_subset(g, e + 1, room, cur, best);
}

} // namespace detail

// size of a maximum f-matching, by enumerating edge subsets
inline std::size_t brute_max(const Multigraph& g, const DegreeBounds& f, const OracleLimit& lim = {}) {
    detail::check_limit(g, lim);
    validate_bounds(g, f);
    std::vector<int> room(f.begin(), f.end());
    std::size_t best = 0;
    detail::best_subset(g, 0, room, 0, best);
    return best;
}

// Alternating trail search restricted to the edges with allowed[e] set (all
// when empty).  Trails are non-empty, start at `from` with an edge of type
// `first`, and end at `to` with an edge of type `last` if given.
inline std::optional<GTrail> brute_alternating_trail(const Multigraph& g, const Matching& m,
                                                     const std::vector<std::uint8_t>& allowed, VertexId from,
                                                     VertexId to, MType first, std::optional<MType> last,
                                                     const OracleLimit& lim = {}) {
    detail::check_limit(g, lim);
    std::vector<std::uint8_t> used(g.num_edges(), 0);
    std::unordered_set<std::uint64_t> dead;
    GTrail cur;
    cur.start = from;
    auto key = [&](VertexId at, MType t) {
        std::uint64_t mask = 0;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (used[e]) mask |= std::uint64_t{1} << e;
        return (mask * g.num_vertices() + at) * 2 + std::uint64_t(t);
    };
    auto dfs = [&](auto&& self, VertexId at, MType need) -> bool {
        if (cur.size() >= lim.max_trail_len) return false;
        std::uint64_t k = key(at, need);
        if (dead.count(k)) return false;
        auto [b, e] = g.incident(at);
        for (auto p = b; p != e; ++p) {
            EdgeId id = *p;
            if (used[id] || m.type(id) != need || (!allowed.empty() && !allowed[id])) continue;
            VertexId y = g.edge(id).other(at);
            used[id] = 1;
            cur.steps.push_back({id, at, y});
            if (y == to && (!last || *last == need)) return true;
            if (self(self, y, flip(need))) return true;
            cur.steps.pop_back();
            used[id] = 0;
        }
        dead.insert(k);
        return false;
    };
    if (dfs(dfs, from, first)) return cur;
    return std::nullopt;
}

// Is there an augmenting trail for (g, f, m)?  Exhaustive over alternating
// trails out of every deficient vertex.
inline bool has_augmenting_trail(const Multigraph& g, const DegreeBounds& f, const Matching& m,
                                 const OracleLimit& lim = {}) {
    detail::check_limit(g, lim);
    std::vector<int> def = deficiency(g, f, m);
    std::vector<std::uint8_t> used(g.num_edges(), 0);
    for (VertexId a = 0; a < g.num_vertices(); ++a) {
        if (def[a] <= 0) continue;
        std::unordered_set<std::uint64_t> dead;
        std::uint64_t mask = 0;
        auto dfs = [&](auto&& self, VertexId at, MType need, std::size_t len) -> bool {
            if (len >= lim.max_trail_len) return false;
            std::uint64_t k = (mask * g.num_vertices() + at) * 2 + std::uint64_t(need);
            if (dead.count(k)) return false;
            auto [b, e] = g.incident(at);
            for (auto p = b; p != e; ++p) {
                EdgeId id = *p;
                if (used[id] || m.type(id) != need) continue;
                VertexId y = g.edge(id).other(at);
                if (need == MType::unmatched && def[y] > 0 && (y != a || def[a] >= 2)) return true;
                used[id] = 1;
                mask |= std::uint64_t{1} << id;
                bool ok = self(self, y, flip(need), len + 1);
                used[id] = 0;
                mask &= ~(std::uint64_t{1} << id);
                if (ok) return true;
            }
            dead.insert(k);
            return false;
        };
        if (dfs(dfs, a, MType::unmatched, 0)) return true;
    }
    return false;
}

// Maximum cardinality matching (f == 1) of the simple graph underlying g,
// textbook Edmonds with blossom contraction by base relabeling, O(n^3).
inline std::size_t edmonds_max_matching(const Multigraph& g) {
    const int n = static_cast<int>(g.num_vertices());
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[e.u].push_back(int(e.v));
        adj[e.v].push_back(int(e.u));
    }
    std::vector<int> match(n, -1), p(n), base(n);
    std::vector<char> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = p[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    };
    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int cb = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cb, to);
                    mark_path(to, cb, v);
                    for (int i = 0; i < n; ++i) {
                        if (!blossom[base[i]]) continue;
                        base[i] = cb;
                        if (!used[i]) {
                            used[i] = 1;
                            q.push(i);
                        }
                    }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    std::size_t size = 0;
    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int w = find_path(v);
        if (w == -1) continue;
        ++size;
        while (w != -1) {
            int pv = p[w], ppv = match[pv];
            match[w] = pv;
            match[pv] = w;
            w = ppv;
        }
    }
    return size;
}

} // namespace ftrails::oracle
