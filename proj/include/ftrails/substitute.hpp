#pragma once

// Replaces each weighted blossom B (base β, base edge η) by β plus a shadow
// vertex b joined by the edge βb, with f(β) = f(b) = 1.
//
//   light: βb unmatched, matched edges at B go to b, unmatched ones to β
//   heavy: βb matched, matched edges at B go to β, unmatched ones to b
//
// η keeps β as its endpoint.  Vertices of B - β stay in the graph, isolated,
// with bound 0, so vertex ids do not change; shadows are appended.

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "expand.hpp"
#include "multigraph.hpp"

namespace ftrails {

enum class BlossomKind : std::uint8_t { light, heavy };

struct WeightedBlossom {
    std::vector<VertexId> vertices;
    VertexId base = 0;
    std::optional<EdgeId> eta;
    BlossomKind kind = BlossomKind::light;
};

struct SubstitutedBlossom {
    VertexId base = 0;
    VertexId shadow = 0;
    BlossomKind kind = BlossomKind::light;
    std::optional<EdgeId> base_edge; // original id of η
    EdgeId beta_b = 0;               // id of βb in the substituted graph
};

struct SubstituteMap {
    std::vector<SubstitutedBlossom> blossoms;
    std::vector<EdgeId> edge_map; // original id -> substituted id, npos32 if internal to a blossom
    std::vector<EdgeId> original; // substituted id -> original id, npos32 for βb edges
    std::vector<std::uint32_t> region; // substituted vertex -> blossom index for β and b
};

struct Substituted {
    Multigraph g;
    DegreeBounds f;
    Matching m;
    SubstituteMap map;
};

inline Substituted build_substitute(const Multigraph& g, const DegreeBounds& f, const Matching& m,
                                    const std::vector<WeightedBlossom>& blossoms) {
    validate_matching(g, f, m);
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> owner(n, npos32);
    for (std::uint32_t i = 0; i < blossoms.size(); ++i) {
        const WeightedBlossom& wb = blossoms[i];
        bool has_base = false;
        for (VertexId v : wb.vertices) {
            if (v >= n) throw InputError("blossom vertex out of range");
            if (owner[v] != npos32) throw InputError("blossoms overlap at vertex " + std::to_string(v + 1));
            owner[v] = i;
            has_base |= v == wb.base;
        }
        if (!has_base) throw InputError("blossom base is not one of its vertices");
    }

    Substituted s;
    s.map.blossoms.resize(blossoms.size());
    s.f = f;
    s.g = Multigraph(n);
    for (std::uint32_t i = 0; i < blossoms.size(); ++i) {
        const WeightedBlossom& wb = blossoms[i];
        SubstitutedBlossom& sb = s.map.blossoms[i];
        sb.base = wb.base;
        sb.kind = wb.kind;
        sb.base_edge = wb.eta;
        sb.shadow = s.g.add_vertex();
        s.f.push_back(1);
        for (VertexId v : wb.vertices) s.f[v] = 0;
        s.f[wb.base] = 1;
        if (wb.eta) {
            if (*wb.eta >= g.num_edges()) throw InputError("base edge id out of range");
            const Edge& e = g.edge(*wb.eta);
            if (e.u != wb.base && e.v != wb.base) throw InputError("base edge is not incident to the base");
            if (owner[e.other(wb.base)] == i) throw InputError("base edge does not leave its blossom");
            MType want = wb.kind == BlossomKind::light ? MType::matched : MType::unmatched;
            if (m.type(*wb.eta) != want)
                throw InputError(std::string("base edge of a ") + (wb.kind == BlossomKind::light ? "light" : "heavy") +
                                 " blossom must be " + to_string(want));
        } else if (wb.kind == BlossomKind::heavy) {
            throw InputError("a heavy blossom needs a base edge");
        }
    }

    auto endpoint = [&](VertexId x, EdgeId e) -> VertexId {
        std::uint32_t i = owner[x];
        if (i == npos32) return x;
        const SubstitutedBlossom& sb = s.map.blossoms[i];
        if (sb.base_edge && *sb.base_edge == e) return sb.base;
        bool matched = m.contains(e);
        bool to_shadow = sb.kind == BlossomKind::light ? matched : !matched;
        return to_shadow ? sb.shadow : sb.base;
    };

    s.map.edge_map.assign(g.num_edges(), npos32);
    std::vector<EdgeId> kept_matched;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (owner[ed.u] != npos32 && owner[ed.u] == owner[ed.v]) continue;
        EdgeId id = s.g.add_edge(endpoint(ed.u, e), endpoint(ed.v, e));
        s.map.edge_map[e] = id;
        s.map.original.push_back(e);
        if (m.contains(e)) kept_matched.push_back(id);
    }
    std::vector<EdgeId> bb_matched;
    for (SubstitutedBlossom& sb : s.map.blossoms) {
        sb.beta_b = s.g.add_edge(sb.base, sb.shadow);
        s.map.original.push_back(npos32);
        if (sb.kind == BlossomKind::heavy) bb_matched.push_back(sb.beta_b);
    }
    s.m = Matching(s.g.num_edges());
    for (EdgeId e : kept_matched) s.m.insert(e);
    for (EdgeId e : bb_matched) s.m.insert(e);
    s.map.region.assign(s.g.num_vertices(), npos32);
    for (std::uint32_t i = 0; i < s.map.blossoms.size(); ++i) {
        s.map.region[s.map.blossoms[i].base] = i;
        s.map.region[s.map.blossoms[i].shadow] = i;
    }
    try {
        validate_matching(s.g, s.f, s.m);
    } catch (const InputError& err) {
        throw InputError(std::string("matched edge pattern does not fit the blossom kinds: ") + err.what());
    }
    return s;
}

struct Crossing {
    std::uint32_t blossom = 0;
    EdgeId entry = npos32; // original ids; npos32 where the trail ends at β
    EdgeId exit = npos32;
    bool via_shadow = false;
};

struct PulledTrail {
    std::vector<EdgeId> edges; // original ids, βb edges dropped
    std::vector<Crossing> crossings;
};

// Maps a trail of the substituted graph back to original edge ids and
// reports how it crosses each substituted blossom.
inline PulledTrail pull_back_trail(const Multigraph& gs, const GTrail& t, const SubstituteMap& map) {
    PulledTrail out;
    for (const TrailStep& st : t.steps) {
        if (st.edge >= map.original.size()) throw InputError("trail uses an unknown edge");
        if (map.original[st.edge] != npos32) out.edges.push_back(map.original[st.edge]);
    }
    const std::size_t len = t.steps.size();
    for (std::uint32_t i = 0; i < map.blossoms.size(); ++i) {
        const SubstitutedBlossom& sb = map.blossoms[i];
        auto inside = [&](VertexId v) { return v == sb.base || v == sb.shadow; };
        std::size_t lo = len, hi = 0;
        for (std::size_t k = 0; k < len; ++k) {
            const Edge& e = gs.edge(t.steps[k].edge);
            if (!inside(e.u) && !inside(e.v)) continue;
            if (lo != len && k != hi + 1)
                throw StructuralError("trail visits substituted blossom " + std::to_string(i) + " twice");
            if (lo == len) lo = k;
            hi = k;
        }
        if (lo == len) continue;
        std::vector<VertexId> vs{t.steps[lo].from};
        for (std::size_t k = lo; k <= hi; ++k) vs.push_back(t.steps[k].to);
        const std::size_t r = vs.size() - 1;
        auto is_eta = [&](std::size_t k) {
            return sb.base_edge && map.original[t.steps[k].edge] == *sb.base_edge;
        };
        bool through = !inside(vs.front()) && !inside(vs.back());
        bool ok = false;
        if (through && sb.base_edge) {
            if (r == 2)
                ok = vs[1] == sb.base && (is_eta(lo) || is_eta(hi));
            else if (r == 3)
                ok = (vs[1] == sb.base && vs[2] == sb.shadow && is_eta(lo)) ||
                     (vs[1] == sb.shadow && vs[2] == sb.base && is_eta(hi));
        } else if (!through && !sb.base_edge) {
            // one end of the trail is β itself
            if (vs.front() == sb.base && lo == 0 && !inside(vs.back()))
                ok = r == 1 || (r == 2 && vs[1] == sb.shadow);
            else if (vs.back() == sb.base && hi + 1 == len && !inside(vs.front()))
                ok = r == 1 || (r == 2 && vs[1] == sb.shadow);
        }
        if (!ok) throw StructuralError("trail crosses substituted blossom " + std::to_string(i) + " illegally");
        Crossing c;
        c.blossom = i;
        c.entry = inside(vs.front()) ? npos32 : map.original[t.steps[lo].edge];
        c.exit = inside(vs.back()) ? npos32 : map.original[t.steps[hi].edge];
        for (std::size_t k = lo; k <= hi; ++k) c.via_shadow |= t.steps[k].edge == sb.beta_b;
        out.crossings.push_back(c);
    }
    return out;
}

// Lines "B light|heavy <base> <eta-edge|-> v1 v2 ...", vertices from 1.
inline std::vector<WeightedBlossom> parse_blossom_list(std::istream& in) {
    std::vector<WeightedBlossom> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        std::istringstream ls(text);
        std::string tag, kind, eta;
        if (!(ls >> tag) || tag == "c") continue;
        auto where = "line " + std::to_string(line) + ": ";
        if (tag != "B") throw InputError(where + "unknown record '" + tag + "'");
        WeightedBlossom wb;
        long long base;
        if (!(ls >> kind >> base >> eta)) throw InputError(where + "expected kind, base and base edge");
        if (kind == "light")
            wb.kind = BlossomKind::light;
        else if (kind == "heavy")
            wb.kind = BlossomKind::heavy;
        else
            throw InputError(where + "kind must be light or heavy");
        if (base < 1) throw InputError(where + "bad base vertex");
        wb.base = VertexId(base - 1);
        if (eta != "-") {
            try {
                std::size_t used = 0;
                long long id = std::stoll(eta, &used);
                if (used != eta.size() || id < 0) throw InputError(where + "bad base edge");
                wb.eta = EdgeId(id);
            } catch (const std::logic_error&) {
                throw InputError(where + "bad base edge");
            }
        }
        long long v;
        while (ls >> v) {
            if (v < 1) throw InputError(where + "bad vertex");
            wb.vertices.push_back(VertexId(v - 1));
        }
        if (!ls.eof()) throw InputError(where + "bad vertex list");
        out.push_back(std::move(wb));
    }
    return out;
}

} // namespace ftrails
