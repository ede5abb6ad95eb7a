#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "engine.hpp"
#include "multigraph.hpp"

namespace ftrails {

struct TrailStep {
    EdgeId edge;
    VertexId from;
    VertexId to;
};

// A trail in G as a sequence of directed edge traversals.
struct GTrail {
    VertexId start = 0;
    std::vector<TrailStep> steps;

    VertexId end() const { return steps.empty() ? start : steps.back().to; }
    bool empty() const noexcept { return steps.empty(); }
    std::size_t size() const noexcept { return steps.size(); }
    std::vector<EdgeId> edge_ids() const {
        std::vector<EdgeId> out;
        out.reserve(steps.size());
        for (const auto& s : steps) out.push_back(s.edge);
        return out;
    }
};

namespace detail {

// Walks the blossom records of a frozen search tree and writes out trails.
// Work items are expanded on an explicit stack; reversing an item reverses
// its whole expansion.
class Expander {
  public:
    explicit Expander(const SearchForest& F) : F_(F) {}

    // trail from node v to the base of blossom s, first edge of type i
    GTrail to_base(BlossomId s, NodeId v, MType i) {
        if (!F_.blossom_contains(s, v))
            throw StructuralError("node " + std::to_string(v) + " is not in blossom " + std::to_string(s));
        return run({Item{Kind::to_base, false, s, v, i}}, F_.vertex[v]);
    }

    GTrail augmenting(const AugmentRecord& rec) {
        std::vector<Item> items;
        NodeId at = rec.root;
        for (std::size_t l = 0; l <= rec.tbar_arcs.size(); ++l) {
            if (l < rec.tbar_arcs.size()) {
                NodeId b = rec.tbar_arcs[l];
                NodeId exit = F_.tail(b);
                BlossomId u = F_.top_blossom(exit);
                if (u != npos32) items.push_back({Kind::to_base, true, u, exit, flip(F_.type[b])});
                items.push_back({Kind::step, false, b, 0, MType::matched});
                at = b;
            } else if (rec.final_up) {
                BlossomId u = F_.top_blossom(rec.final_node);
                if (u == npos32) throw StructuralError("reversed-arc invocation outside a blossom");
                items.push_back({Kind::to_base_via_arc, true, u, rec.final_arc, MType::matched});
            } else if (at != rec.final_node) {
                throw StructuralError("augment record does not end at its final node");
            }
        }
        return run(items, F_.vertex[rec.root]);
    }

  private:
    enum class Kind : std::uint8_t { step, to_base, to_base_via_arc, up_seq, down_seq };

    // step: a = arc, b = 1 for upward.  to_base: a = blossom, b = node, t = first type.
    // to_base_via_arc: a = blossom, b = arc.  up_seq: a = blossom, b = j, t = arriving type.
    // down_seq: a = blossom, b = j.
    struct Item {
        Kind kind;
        bool rev;
        std::uint32_t a;
        std::uint32_t b;
        MType t;
    };

    GTrail run(const std::vector<Item>& top, VertexId start) {
        GTrail out;
        out.start = start;
        stack_.clear();
        for (auto it = top.rbegin(); it != top.rend(); ++it) stack_.push_back(*it);
        std::vector<Item> buf;
        while (!stack_.empty()) {
            Item it = stack_.back();
            stack_.pop_back();
            if (it.kind == Kind::step) {
                bool up = (it.b != 0) != it.rev;
                NodeId arc = it.a;
                VertexId h = F_.vertex[arc], t = F_.vertex[F_.tail(arc)];
                out.steps.push_back(up ? TrailStep{F_.edge[arc], h, t} : TrailStep{F_.edge[arc], t, h});
                continue;
            }
            buf.clear();
            expand(it, buf);
            if (!it.rev) {
                for (auto p = buf.rbegin(); p != buf.rend(); ++p) stack_.push_back(*p);
            } else {
                for (Item x : buf) {
                    x.rev = !x.rev;
                    stack_.push_back(x);
                }
            }
        }
        for (std::size_t i = 1; i < out.steps.size(); ++i)
            if (out.steps[i].from != out.steps[i - 1].to) throw InvariantError("expanded trail is not connected");
        if (!out.steps.empty() && out.steps.front().from != start)
            throw InvariantError("expanded trail starts at the wrong vertex");
        return out;
    }

    void expand(const Item& it, std::vector<Item>& out) {
        switch (it.kind) {
        case Kind::to_base: local(it.b, it.t, out); climb(F_.owner[it.b], it.a, out); break;
        case Kind::to_base_via_arc: {
            BlossomId b = F_.arc_owner[it.b];
            if (b == npos32) throw StructuralError("arc is not inside a blossom");
            std::uint32_t j = F_.arc_index[it.b];
            out.push_back(step(it.b, false));
            out.push_back({Kind::down_seq, false, b, j, MType::matched});
            climb(b, it.a, out);
            break;
        }
        case Kind::up_seq: up_seq(it.a, it.b, it.t, out); break;
        case Kind::down_seq: down_seq(it.a, it.b, out); break;
        case Kind::step: break;
        }
    }

    static Item step(NodeId arc, bool up) { return {Kind::step, false, arc, up ? 1u : 0u, MType::matched}; }
    static Item to_base_item(BlossomId s, NodeId v, MType i) { return {Kind::to_base, false, s, v, i}; }

    // trail from atomic member v to the base of its innermost blossom
    void local(NodeId v, MType i, std::vector<Item>& out) {
        BlossomId b = F_.owner[v];
        if (b == npos32) throw StructuralError("node is not inside a blossom");
        const BlossomRecord& rec = F_.blossoms[b];
        std::uint32_t j = F_.owner_index[v];
        if (j == 0) {
            if (i == rec.type) {
                out.push_back(step(F_.cycle_arc(b, 1), false));
                out.push_back({Kind::down_seq, false, b, 1, MType::matched});
            }
            return;
        }
        NodeId aj = F_.cycle_arc(b, j);
        if (F_.type[aj] == i) {
            out.push_back(step(aj, true));
            out.push_back({Kind::up_seq, false, b, j - 1, i});
            return;
        }
        if (j == rec.k) {
            BlossomId s0 = F_.comp_sub(b, 0);
            if (s0 != npos32) out.push_back(to_base_item(s0, rec.x1, i));
            return;
        }
        NodeId next = F_.cycle_arc(b, j + 1);
        if (F_.type[next] != i) throw InvariantError("blossom cycle does not alternate");
        out.push_back(step(next, false));
        out.push_back({Kind::down_seq, false, b, j + 1, MType::matched});
    }

    void climb(BlossomId from, BlossomId to, std::vector<Item>& out) {
        for (BlossomId cur = from; cur != to;) {
            BlossomId p = F_.blossoms[cur].parent;
            if (p == npos32) throw StructuralError("blossom is not nested in the target blossom");
            std::uint32_t m = F_.blossoms[cur].index_in_parent;
            if (m > 0) {
                NodeId am = F_.cycle_arc(p, m);
                out.push_back(step(am, true));
                out.push_back({Kind::up_seq, false, p, m - 1, F_.type[am]});
            }
            cur = p;
        }
    }

    // at the exit of S_j having come up through a_{j+1} with type t; go to the base
    void up_seq(BlossomId b, std::uint32_t j, MType t, std::vector<Item>& out) {
        for (std::uint32_t l = j + 1; l-- > 0;) {
            BlossomId s = F_.comp_sub(b, l);
            if (s != npos32) out.push_back(to_base_item(s, F_.tail(F_.cycle_arc(b, l + 1)), flip(t)));
            if (l >= 1) {
                NodeId al = F_.cycle_arc(b, l);
                out.push_back(step(al, true));
                t = F_.type[al];
            }
        }
    }

    // entered the base of S_j through a_j; go around to the base of b
    void down_seq(BlossomId b, std::uint32_t j, std::vector<Item>& out) {
        const BlossomRecord& rec = F_.blossoms[b];
        for (std::uint32_t l = j; l < rec.k; ++l) {
            NodeId next = F_.cycle_arc(b, l + 1);
            BlossomId s = F_.comp_sub(b, l);
            if (s != npos32) out.push_back({Kind::to_base, true, s, F_.tail(next), flip(F_.type[next])});
            out.push_back(step(next, false));
        }
        BlossomId sk = F_.comp_sub(b, rec.k);
        BlossomId s0 = F_.comp_sub(b, 0);
        MType arrive = F_.type[F_.cycle_arc(b, rec.k)];
        if (s0 == npos32) {
            if (sk != npos32) out.push_back({Kind::to_base, true, sk, rec.x2, rec.type});
            else if (arrive != rec.type) throw InvariantError("blossom closes with the wrong M-type");
            return;
        }
        if (sk != npos32) {
            arrive = rec.type;
            out.push_back({Kind::to_base, true, sk, rec.x2, arrive});
        }
        out.push_back(to_base_item(s0, rec.x1, flip(arrive)));
    }

    const SearchForest& F_;
    std::vector<Item> stack_;
};

} // namespace detail

// Alternating trail inside blossom b from node v to its base, first edge of
// type i, last edge of the blossom's type.  Empty when v is the base and i is
// the type of the base arc.
inline GTrail pi_trail(const SearchForest& F, BlossomId b, NodeId v, MType i) {
    return detail::Expander(F).to_base(b, v, i);
}

inline GTrail expand_trail(const SearchForest& F, const AugmentRecord& rec) {
    return detail::Expander(F).augmenting(rec);
}

inline std::vector<GTrail> expand_all(const BlockingResult& r) {
    std::vector<GTrail> out;
    out.reserve(r.trails.size());
    detail::Expander ex(r.forest);
    for (const auto& rec : r.trails) out.push_back(ex.augmenting(rec));
    return out;
}

// Throws StructuralError unless t is an alternating trail w.r.t. m.
inline void check_alternating(const Multigraph& g, const Matching& m, const GTrail& t) {
    VertexId at = t.start;
    std::vector<EdgeId> seen;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const TrailStep& s = t.steps[i];
        const Edge& e = g.edge(s.edge);
        if (s.from != at || !((e.u == s.from && e.v == s.to) || (e.v == s.from && e.u == s.to)))
            throw StructuralError("trail step " + std::to_string(i) + " does not follow edge " + std::to_string(s.edge));
        if (i > 0 && m.contains(s.edge) == m.contains(t.steps[i - 1].edge))
            throw StructuralError("trail does not alternate at step " + std::to_string(i));
        seen.push_back(s.edge);
        at = s.to;
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw StructuralError("trail repeats an edge");
}

// M xor the union of the trails.  The trails must be edge-disjoint augmenting
// trails; the result is checked against f.
inline Matching rematch(const Multigraph& g, const DegreeBounds& f, const Matching& m,
                        const std::vector<GTrail>& trails) {
    std::vector<int> def = deficiency(g, f, m);
    std::vector<std::uint8_t> used(g.num_edges(), 0);
    Matching out = m;
    for (const GTrail& t : trails) {
        if (t.empty()) throw StructuralError("empty augmenting trail");
        check_alternating(g, m, t);
        if (m.contains(t.steps.front().edge) || m.contains(t.steps.back().edge))
            throw StructuralError("augmenting trail must start and end with unmatched edges");
        --def[t.start];
        --def[t.end()];
        if (def[t.start] < 0 || def[t.end()] < 0) throw StructuralError("augmenting trail endpoint is not deficient");
        for (const auto& s : t.steps) {
            if (used[s.edge]) throw StructuralError("augmenting trails share edge " + std::to_string(s.edge));
            used[s.edge] = 1;
            out.toggle(s.edge);
        }
    }
    validate_matching(g, f, out);
    if (out.size() != m.size() + trails.size()) throw InvariantError("rematch did not grow the matching");
    return out;
}

} // namespace ftrails
