#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "engine.hpp"
#include "expand.hpp"
#include "multigraph.hpp"
#include "union_find.hpp"

namespace ftrails {

enum class Label : std::uint8_t { inner, outer, in_complete_blossom, orphan };

inline const char* to_string(Label l) noexcept {
    switch (l) {
    case Label::inner: return "I";
    case Label::outer: return "O";
    case Label::in_complete_blossom: return "blossom";
    case Label::orphan: return "orphan";
    }
    return "?";
}

// The graph left over after a phase: trail edges removed except those lying
// in maximal complete blossoms.
struct ResidualGraph {
    std::vector<std::uint8_t> has_edge; // per edge id of G
    Matching m;                         // M restricted to the residual edges
    DegreeBounds f;                     // f'(x) = deg(x, M') + def(x)
    std::vector<BlossomId> maximal_complete; // per node, npos32 if none
    std::vector<std::uint8_t> vertex_in_complete;

    Multigraph subgraph(const Multigraph& g, std::vector<EdgeId>* ids = nullptr) const {
        Multigraph h(g.num_vertices());
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (!has_edge[e]) continue;
            h.add_edge(g.edge(e).u, g.edge(e).v);
            if (ids) ids->push_back(e);
        }
        return h;
    }
    // m expressed in the edge ids of subgraph()
    Matching sub_matching(const Multigraph& g) const {
        Matching out;
        EdgeId k = 0;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (!has_edge[e]) continue;
            if (m.contains(e)) out.insert(k);
            ++k;
        }
        return out;
    }
};

// maximal complete blossom containing each node
inline std::vector<BlossomId> maximal_complete_blossoms(const SearchForest& F) {
    std::vector<BlossomId> mc(F.blossoms.size(), npos32);
    for (std::size_t b = F.blossoms.size(); b-- > 0;) {
        BlossomId p = F.blossoms[b].parent;
        if (p != npos32 && mc[p] != npos32)
            mc[b] = mc[p];
        else if (F.blossoms[b].complete)
            mc[b] = static_cast<BlossomId>(b);
    }
    std::vector<BlossomId> out(F.num_nodes(), npos32);
    for (NodeId v = 0; v < F.num_nodes(); ++v)
        if (F.owner[v] != npos32) out[v] = mc[F.owner[v]];
    return out;
}

inline ResidualGraph residual_graph(const Multigraph& g, const Matching& m, const BlockingResult& r,
                                    const std::vector<GTrail>& trails) {
    const SearchForest& F = r.forest;
    ResidualGraph rg;
    rg.has_edge.assign(g.num_edges(), 1);
    for (const GTrail& t : trails)
        for (const auto& s : t.steps) rg.has_edge[s.edge] = 0;
    rg.maximal_complete = maximal_complete_blossoms(F);
    rg.vertex_in_complete.assign(g.num_vertices(), 0);
    for (NodeId v = 0; v < F.num_nodes(); ++v) {
        BlossomId b = rg.maximal_complete[v];
        if (b == npos32) continue;
        rg.vertex_in_complete[F.vertex[v]] = 1;
        if (v != F.blossoms[b].base) rg.has_edge[F.edge[v]] = 1;
    }
    rg.m = Matching(g.num_edges());
    rg.f.assign(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!rg.has_edge[e] || !m.contains(e)) continue;
        rg.m.insert(e);
        ++rg.f[g.edge(e).u];
        ++rg.f[g.edge(e).v];
    }
    for (VertexId x = 0; x < g.num_vertices(); ++x) rg.f[x] += r.def_after[x];
    return rg;
}

inline std::vector<Label> compute_labels(const BlockingResult& r, const ResidualGraph& rg) {
    std::vector<Label> out(r.e1.size());
    for (VertexId x = 0; x < out.size(); ++x) {
        if (rg.vertex_in_complete[x])
            out[x] = Label::in_complete_blossom;
        else if (!r.e1[x].set)
            out[x] = Label::orphan;
        else
            out[x] = r.e1[x].type == MType::unmatched ? Label::inner : Label::outer;
    }
    return out;
}

struct BoundValue {
    std::int64_t value = 0;
    std::vector<std::vector<VertexId>> components; // of G - I - O
    std::vector<std::int64_t> component_f;         // f(C)
    std::vector<std::int64_t> component_to_o;      // |E[C,O]|
};

// f(I) + |γ(O)| + Σ_C ⌊(f(C) + |E[C,O]|)/2⌋ over the components C of G - I - O.
// Only the edges with keep[e] set are considered (all of them when keep is empty).
inline BoundValue bound_value(const Multigraph& g, const DegreeBounds& f, const std::vector<std::uint8_t>& in_i,
                              const std::vector<std::uint8_t>& in_o, const std::vector<std::uint8_t>& keep = {}) {
    const std::size_t n = g.num_vertices();
    if (in_i.size() != n || in_o.size() != n || f.size() != n) throw InputError("label vectors do not match the graph");
    for (VertexId x = 0; x < n; ++x)
        if (in_i[x] && in_o[x]) throw InputError("vertex " + std::to_string(x + 1) + " is in both I and O");
    BoundValue bv;
    UnionFind uf(n);
    for (VertexId x = 0; x < n; ++x)
        if (in_i[x]) bv.value += f[x];
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!keep.empty() && !keep[e]) continue;
        const Edge& ed = g.edge(e);
        if (in_o[ed.u] && in_o[ed.v]) ++bv.value;
        bool cu = !in_i[ed.u] && !in_o[ed.u], cv = !in_i[ed.v] && !in_o[ed.v];
        if (cu && cv) uf.unite(ed.u, ed.v);
    }
    std::vector<std::uint32_t> comp(n, npos32);
    for (VertexId x = 0; x < n; ++x) {
        if (in_i[x] || in_o[x]) continue;
        std::uint32_t r = uf.find(x);
        if (comp[r] == npos32) {
            comp[r] = static_cast<std::uint32_t>(bv.components.size());
            bv.components.emplace_back();
            bv.component_f.push_back(0);
            bv.component_to_o.push_back(0);
        }
        comp[x] = comp[r];
        bv.components[comp[x]].push_back(x);
        bv.component_f[comp[x]] += f[x];
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!keep.empty() && !keep[e]) continue;
        const Edge& ed = g.edge(e);
        if (comp[ed.u] != npos32 && in_o[ed.v]) ++bv.component_to_o[comp[ed.u]];
        else if (comp[ed.v] != npos32 && in_o[ed.u]) ++bv.component_to_o[comp[ed.v]];
    }
    for (std::size_t c = 0; c < bv.components.size(); ++c)
        bv.value += (bv.component_f[c] + bv.component_to_o[c]) / 2;
    return bv;
}

struct Certificate {
    std::vector<Label> labels;
    std::vector<VertexId> inner, outer;
    BoundValue bound;
    std::size_t residual_size = 0; // |M ∩ RG|
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

// Checks the min-max conditions for (RG, f', M') where the inputs describe
// the phase that produced r from m.
inline Certificate verify(const Multigraph& g, const Matching& m, const BlockingResult& r,
                          const std::vector<GTrail>& trails) {
    ResidualGraph rg = residual_graph(g, m, r, trails);
    Certificate c;
    c.labels = compute_labels(r, rg);
    const std::size_t n = g.num_vertices();
    std::vector<std::uint8_t> in_i(n, 0), in_o(n, 0);
    for (VertexId x = 0; x < n; ++x) {
        if (c.labels[x] == Label::inner) {
            in_i[x] = 1;
            c.inner.push_back(x);
        } else if (c.labels[x] == Label::outer) {
            in_o[x] = 1;
            c.outer.push_back(x);
        }
    }
    c.bound = bound_value(g, rg.f, in_i, in_o, rg.has_edge);
    c.residual_size = rg.m.size();
    auto fail = [&](std::string s) { c.failures.push_back(std::move(s)); };

    std::vector<int> deg(n, 0);
    std::vector<std::uint32_t> comp(n, npos32);
    for (std::size_t k = 0; k < c.bound.components.size(); ++k)
        for (VertexId x : c.bound.components[k]) comp[x] = static_cast<std::uint32_t>(k);
    std::vector<std::int64_t> inside(c.bound.components.size(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!rg.has_edge[e]) continue;
        const Edge& ed = g.edge(e);
        bool mt = rg.m.contains(e);
        if (mt) {
            ++deg[ed.u];
            ++deg[ed.v];
        }
        if (in_i[ed.u] && in_i[ed.v] && mt) fail("matched edge " + std::to_string(e) + " inside I");
        if (in_o[ed.u] && in_o[ed.v] && !mt) fail("unmatched edge " + std::to_string(e) + " inside O");
        if (mt && comp[ed.u] != npos32 && (comp[ed.v] == comp[ed.u] || in_o[ed.v])) ++inside[comp[ed.u]];
        else if (mt && comp[ed.v] != npos32 && in_o[ed.u]) ++inside[comp[ed.v]];

        // an orphan meets a labeled vertex only through an edge of that
        // vertex's e1 type
        for (int side = 0; side < 2; ++side) {
            VertexId a = side ? ed.v : ed.u, b = side ? ed.u : ed.v;
            if (c.labels[a] != Label::orphan) continue;
            if (c.labels[b] == Label::inner || c.labels[b] == Label::outer) {
                if (m.type(e) != r.e1[b].type)
                    fail("edge " + std::to_string(e) + " joins orphan " + std::to_string(a + 1) +
                         " to a labeled vertex with the wrong type");
            }
        }
    }
    for (VertexId x : c.inner)
        if (deg[x] != rg.f[x]) fail("inner vertex " + std::to_string(x + 1) + " is not saturated");
    for (std::size_t k = 0; k < c.bound.components.size(); ++k) {
        std::int64_t need = c.bound.component_f[k] + c.bound.component_to_o[k];
        std::int64_t slack = need - 2 * inside[k];
        if (slack != 0 && slack != 1)
            fail("component " + std::to_string(k + 1) + " is not tight (slack " + std::to_string(slack) + ")");
    }
    if (c.bound.value != static_cast<std::int64_t>(c.residual_size))
        fail("bound " + std::to_string(c.bound.value) + " differs from residual matching size " +
             std::to_string(c.residual_size));
    return c;
}

} // namespace ftrails
