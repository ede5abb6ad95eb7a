#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "multigraph.hpp"
#include "union_find.hpp"

namespace ftrails {

using NodeId = std::uint32_t;
using BlossomId = std::uint32_t;

// A non-root node is identified with the arc entering it, so arc ids are node ids.
struct BlossomRecord {
    NodeId base = npos32;
    NodeId x1 = npos32; // frame node that did the pop
    NodeId x2 = npos32; // node of the popped entry
    MType type = MType::unmatched;
    std::uint32_t k = 0;          // number of cycle arcs
    std::uint32_t arc_first = 0;  // a_1..a_k in arc_pool
    std::uint32_t comp_first = 0; // S_0..S_k in comp_node / comp_blossom
    BlossomId parent = npos32;
    std::uint32_t index_in_parent = 0;
    std::uint32_t search = 0;
    bool complete = false;
};

struct SearchForest {
    std::vector<VertexId> vertex;
    std::vector<NodeId> parent; // npos32 at roots
    std::vector<EdgeId> edge;   // npos32 at roots
    std::vector<MType> type;    // type of the entering arc; roots count as matched
    std::vector<std::uint32_t> search;
    std::vector<std::uint32_t> children;

    // blossom in whose cycle the node is an atomic member, and its index there
    std::vector<BlossomId> owner;
    std::vector<std::uint32_t> owner_index;
    // blossom in whose cycle the arc (head node) lies, and its index there
    std::vector<BlossomId> arc_owner;
    std::vector<std::uint32_t> arc_index;

    std::vector<BlossomRecord> blossoms;
    std::vector<NodeId> arc_pool;
    std::vector<NodeId> comp_node;        // atomic component, or npos32
    std::vector<BlossomId> comp_blossom;  // blossom component, or npos32

    std::size_t num_nodes() const noexcept { return vertex.size(); }
    bool is_root(NodeId v) const { return parent[v] == npos32; }
    NodeId tail(NodeId arc) const { return parent[arc]; }

    NodeId cycle_arc(BlossomId b, std::uint32_t j) const { // 1 <= j <= k
        return arc_pool[blossoms[b].arc_first + j - 1];
    }
    NodeId comp_atomic(BlossomId b, std::uint32_t j) const {
        return comp_node[blossoms[b].comp_first + j];
    }
    BlossomId comp_sub(BlossomId b, std::uint32_t j) const {
        return comp_blossom[blossoms[b].comp_first + j];
    }
    NodeId comp_base(BlossomId b, std::uint32_t j) const {
        NodeId a = comp_atomic(b, j);
        return a != npos32 ? a : blossoms[comp_sub(b, j)].base;
    }
    // arc entering the base, npos32 for a root base
    NodeId base_arc(BlossomId b) const {
        NodeId base = blossoms[b].base;
        return is_root(base) ? npos32 : base;
    }
    MType base_arc_type(BlossomId b) const { return type[blossoms[b].base]; }

    // outermost blossom containing node v, npos32 if v is atomic
    BlossomId top_blossom(NodeId v) const {
        BlossomId b = owner[v];
        if (b == npos32) return npos32;
        while (blossoms[b].parent != npos32) b = blossoms[b].parent;
        return b;
    }
    bool blossom_contains(BlossomId outer, NodeId v) const {
        for (BlossomId b = owner[v]; b != npos32; b = blossoms[b].parent)
            if (b == outer) return true;
        return false;
    }
    // nodes of blossom b, in creation order
    std::vector<NodeId> blossom_nodes(BlossomId b) const {
        std::vector<NodeId> out;
        for (NodeId v = 0; v < num_nodes(); ++v)
            if (blossom_contains(b, v)) out.push_back(v);
        return out;
    }
};

// A T-bar path from a search root to the node whose invocation augmented.
struct AugmentRecord {
    std::uint32_t search = 0;
    NodeId root = npos32;
    std::vector<NodeId> tbar_arcs; // top-down
    NodeId final_node = npos32;
    NodeId final_arc = npos32;     // entering arc of the final invocation
    bool final_up = false;         // invocation entered through a reversed arc
    VertexId alpha = 0;
    VertexId x = 0;
};

struct E1Record {
    bool set = false;
    NodeId node = npos32;
    NodeId arc = npos32;
    bool up = false;
    MType type = MType::matched;
    std::uint32_t search = 0;
    std::uint32_t nodes_at_return = 0;
};

struct EngineStats {
    std::uint64_t searches = 0;
    std::uint64_t grows = 0;
    std::uint64_t pops = 0;
    std::uint64_t blossoms = 0;
    std::uint64_t noop_pops = 0;
};

struct EngineOptions {
    bool check = false;
    std::ostream* trace = nullptr;
    std::vector<VertexId> order; // empty: ascending
};

struct BlockingResult {
    SearchForest forest;
    std::vector<AugmentRecord> trails;
    std::vector<E1Record> e1;
    std::vector<int> def_before;
    std::vector<int> def_after;
    EngineStats stats;
};

// Head and tail of one list in a PooledQueues.  Callers keep these next to
// their own per-key data.
struct QueueEnds {
    std::uint32_t head = npos32;
    std::uint32_t tail = npos32;
};

// FIFO lists sharing a single pool.  pop returns the earliest pushed element
// still present.
template <class T>
class PooledQueues {
  public:
    void push(QueueEnds& q, const T& value) {
        auto idx = static_cast<std::uint32_t>(pool_.size());
        pool_.push_back({value, npos32});
        if (q.tail == npos32)
            q.head = idx;
        else
            pool_[q.tail].next = idx;
        q.tail = idx;
    }
    void reserve(std::size_t cells) { pool_.reserve(cells); }
    static bool empty(const QueueEnds& q) { return q.head == npos32; }
    const T& front(const QueueEnds& q) const { return pool_[q.head].value; }
    T pop(QueueEnds& q) {
        if (empty(q)) throw InvariantError("pop from an empty list");
        const Cell& c = pool_[q.head];
        q.head = c.next;
        if (q.head == npos32) q.tail = npos32;
        return c.value;
    }

  private:
    struct Cell {
        T value;
        std::uint32_t next;
    };
    std::vector<Cell> pool_;
};

namespace detail {

class TrailFinder {
  public:
    TrailFinder(const Multigraph& g, const DegreeBounds& f, const Matching& m, const EngineOptions& opt)
        : g_(g), m_(m), opt_(opt) {
        res_.def_before = deficiency(g, f, m);
        const std::size_t n = g.num_vertices();
        vs_.assign(n, {});
        for (VertexId v = 0; v < n; ++v) vs_[v].def = res_.def_before[v];
        res_.e1.assign(n, {});
        build_grow_lists();
        // non-root nodes enter by distinct edges; a vertex roots at most
        // def + 1 searches
        std::size_t nodes = g.num_edges() + 1;
        for (int d : res_.def_before) nodes += d > 0 ? 2 * std::size_t(d) : 0;
        reserve_nodes(nodes);
    }

    BlockingResult run() {
        const std::size_t n = g_.num_vertices();
        std::vector<VertexId> order = opt_.order;
        if (order.empty()) {
            order.resize(n);
            for (VertexId v = 0; v < n; ++v) order[v] = v;
        }
        for (VertexId a : order) {
            if (a >= n) throw InputError("search order names an unknown vertex");
            while (vs_[a].def > 0 && !vs_[a].e1_set) search(a);
        }
        res_.def_after.resize(n);
        for (VertexId v = 0; v < n; ++v) res_.def_after[v] = vs_[v].def;
        return std::move(res_);
    }

  private:
    enum Stage : std::uint8_t { start, grow, blossom_loop, invoke };

    struct Frame {
        NodeId node;
        NodeId arc;
        bool up;
        MType t;
        Stage stage;
        BlossomId blossom;
        std::uint32_t next;
    };

    struct BLEntry {
        NodeId node;
        NodeId arc;
        bool up;
        MType type;
        std::uint32_t search;
    };

    // hot per-vertex state, kept together so a visit touches one cache line
    struct VState {
        int def = 0;
        std::uint32_t gl_cur[2] = {0, 0}; // GL cursor per M-type
        std::uint32_t gl_end[2] = {0, 0};
        std::uint32_t bl_count[2] = {0, 0};
        NodeId last_occ = npos32; // latest node of this vertex placed in a blossom
        QueueEnds bl;
        bool in_blossom = false;
        bool e1_set = false;
    };

    // twin: position of the same edge in the other endpoint's list; the top
    // bit marks an edge already grown from that side
    struct GLEntry {
        EdgeId edge;
        VertexId other;
        std::uint32_t twin;
    };
    static constexpr std::uint32_t grown_bit = 1u << 31;

    static std::size_t ti(MType t) { return std::size_t(t); }

    void build_grow_lists() {
        const std::size_t n = g_.num_vertices();
        const auto& edges = g_.edges();
        if (2 * edges.size() >= grown_bit) throw InputError("too many edges");
        // matched edges of x first, then unmatched, each in edge-id order
        for (EdgeId e = 0; e < edges.size(); ++e) {
            const std::size_t t = ti(m_.type(e));
            ++vs_[edges[e].u].gl_end[t];
            if (!edges[e].is_loop()) ++vs_[edges[e].v].gl_end[t];
        }
        std::uint32_t off = 0;
        for (VertexId x = 0; x < n; ++x) {
            VState& s = vs_[x];
            const std::uint32_t c0 = s.gl_end[0], c1 = s.gl_end[1];
            s.gl_cur[0] = off;
            s.gl_cur[1] = s.gl_end[0] = off + c0;
            s.gl_end[1] = off += c0 + c1;
        }
        gl_.resize(off);
        for (EdgeId e = 0; e < edges.size(); ++e) {
            const std::size_t t = ti(m_.type(e));
            const VertexId u = edges[e].u, v = edges[e].v;
            const std::uint32_t pu = vs_[u].gl_cur[t]++;
            if (u == v) {
                gl_[pu] = {e, u, pu};
                continue;
            }
            const std::uint32_t pv = vs_[v].gl_cur[t]++;
            gl_[pu] = {e, v, pv};
            gl_[pv] = {e, u, pu};
        }
        // rewind the cursors
        for (VertexId x = 0; x < n; ++x) {
            vs_[x].gl_cur[0] = x == 0 ? 0 : vs_[x - 1].gl_end[1];
            vs_[x].gl_cur[1] = vs_[x].gl_end[0];
        }
    }

    const GLEntry* next_grow_edge(VState& s, MType t) {
        std::uint32_t& cur = s.gl_cur[ti(t)];
        while (cur < s.gl_end[ti(t)]) {
            const GLEntry& g = gl_[cur++];
            if (!(g.twin & grown_bit)) return &g;
        }
        return nullptr;
    }

    void reserve_nodes(std::size_t nodes) {
        SearchForest& F = res_.forest;
        for (auto* v : {&F.vertex, &F.parent, &F.edge, &F.search, &F.children, &F.owner, &F.owner_index,
                        &F.arc_owner, &F.arc_index})
            v->reserve(nodes);
        F.type.reserve(nodes);
        dsu_.reserve(nodes);
        set_base_.reserve(nodes);
        set_blossom_.reserve(nodes);
        bl_.reserve(nodes);
    }

    NodeId new_node(VertexId x, NodeId parent, EdgeId e, MType t) {
        SearchForest& F = res_.forest;
        auto id = static_cast<NodeId>(F.vertex.size());
        F.vertex.push_back(x);
        F.parent.push_back(parent);
        F.edge.push_back(e);
        F.type.push_back(t);
        F.search.push_back(search_id_);
        F.children.push_back(0);
        F.owner.push_back(npos32);
        F.owner_index.push_back(0);
        F.arc_owner.push_back(npos32);
        F.arc_index.push_back(0);
        if (parent != npos32) ++F.children[parent];
        dsu_.add();
        set_base_.push_back(id);
        set_blossom_.push_back(npos32);
        return id;
    }

    void push_frame(NodeId node, NodeId arc, bool up) {
        MType t = res_.forest.type[arc];
        stack_.push_back({node, arc, up, t, start, npos32, 0});
        if (opt_.trace) {
            const auto& F = res_.forest;
            *opt_.trace << "enter " << (up ? "up " : "down ") << F.vertex[node] + 1 << " node " << node
                        << " via " << (F.is_root(arc) ? std::string("root") : "e" + std::to_string(F.edge[arc]))
                        << " " << to_string(t) << "\n";
        }
    }

    void search(VertexId alpha) {
        search_id_ = static_cast<std::uint32_t>(res_.stats.searches++);
        alpha_ = alpha;
        NodeId r = new_node(alpha, npos32, npos32, MType::matched);
        if (opt_.trace) *opt_.trace << "search " << search_id_ << " from " << alpha + 1 << "\n";
        push_frame(r, r, false);
        while (!stack_.empty()) {
            Frame& fr = stack_.back();
            const VertexId x = res_.forest.vertex[fr.node];
            VState& xs = vs_[x];
            switch (fr.stage) {
            case start:
                if (xs.def > 0 && fr.t == MType::unmatched && (x != alpha || xs.def >= 2)) {
                    augment(fr);
                    stack_.clear();
                    return;
                }
                fr.stage = grow;
                [[fallthrough]];
            case grow: {
                const GLEntry* ge = next_grow_edge(xs, flip(fr.t));
                if (ge) {
                    const EdgeId e = ge->edge;
                    gl_[ge->twin].twin |= grown_bit;
                    ++res_.stats.grows;
                    NodeId y = new_node(ge->other, fr.node, e, flip(fr.t));
                    if (opt_.trace)
                        *opt_.trace << "grow e" << e << " " << x + 1 << "-" << res_.forest.vertex[y] + 1 << "\n";
                    if (opt_.check) validate();
                    push_frame(y, y, false);
                    break;
                }
                fr.stage = blossom_loop;
                [[fallthrough]];
            }
            case blossom_loop: {
                std::optional<BLEntry> entry = blossom_test(fr);
                if (!entry) {
                    finish_frame();
                    break;
                }
                BlossomId b = blossom_step(fr, *entry);
                if (opt_.check) validate();
                if (b == npos32) break;
                fr.stage = invoke;
                fr.blossom = b;
                fr.next = 2;
                [[fallthrough]];
            }
            case invoke: {
                Frame& cur = stack_.back();
                const BlossomRecord& rec = res_.forest.blossoms[cur.blossom];
                if (cur.next <= rec.k) {
                    NodeId a = res_.forest.cycle_arc(cur.blossom, cur.next++);
                    push_frame(res_.forest.tail(a), a, true);
                } else {
                    cur.stage = blossom_loop;
                }
                break;
            }
            }
        }
    }

    bool node_in_blossom(NodeId v) { return set_blossom_[dsu_.find(v)] != npos32; }

    BLEntry pop_front(VertexId x) {
        VState& xs = vs_[x];
        BLEntry ent = bl_.pop(xs.bl);
        --xs.bl_count[ti(ent.type)];
        ++res_.stats.pops;
        if (ent.search != search_id_)
            throw InvariantError("popped a BL entry left over from search " + std::to_string(ent.search) +
                                 " at vertex " + std::to_string(x + 1));
        return ent;
    }

    // the popped entry, or nothing to end the blossom loop
    std::optional<BLEntry> blossom_test(const Frame& fr) {
        const VertexId x = res_.forest.vertex[fr.node];
        const VState& xs = vs_[x];
        if (!xs.in_blossom) {
            if (xs.bl_count[ti(flip(fr.t))] == 0) return std::nullopt;
            if (bl_.front(xs.bl).type != flip(fr.t))
                throw InvariantError("front of BL(" + std::to_string(x + 1) + ") has the wrong M-type");
            return pop_front(x);
        }
        bool enlarge = node_in_blossom(fr.node) ||
                       (xs.last_occ != npos32 && xs.last_occ > fr.node);
        if (!enlarge || bl_.empty(xs.bl)) return std::nullopt;
        return pop_front(x);
    }

    BlossomId blossom_step(const Frame& fr, const BLEntry& ent) {
        SearchForest& F = res_.forest;
        const NodeId x1 = fr.node, x2 = ent.node;
        if (F.vertex[x1] != F.vertex[x2]) throw InvariantError("BL entry at the wrong vertex");
        const NodeId r0 = dsu_.find(x1);
        NodeId cur = dsu_.find(x2);
        if (opt_.trace)
            *opt_.trace << "pop " << F.vertex[x1] + 1 << " node " << x2 << " into frame node " << x1 << "\n";
        if (cur == r0) {
            ++res_.stats.noop_pops;
            return npos32;
        }
        path_.clear();
        while (cur != r0) {
            NodeId b = set_base_[cur];
            if (F.parent[b] == npos32 || F.search[b] != search_id_)
                throw InvariantError("popped node is not below the frame node in the contracted tree");
            path_.push_back(b);
            cur = dsu_.find(F.parent[b]);
        }
        std::reverse(path_.begin(), path_.end());

        const auto id = static_cast<BlossomId>(F.blossoms.size());
        BlossomRecord rec;
        rec.base = set_base_[r0];
        rec.x1 = x1;
        rec.x2 = x2;
        rec.k = static_cast<std::uint32_t>(path_.size());
        rec.arc_first = static_cast<std::uint32_t>(F.arc_pool.size());
        rec.comp_first = static_cast<std::uint32_t>(F.comp_node.size());
        rec.search = search_id_;
        BlossomId s0 = set_blossom_[r0];
        rec.type = s0 != npos32 ? F.blossoms[s0].type : F.type[path_.front()];

        auto add_comp = [&](NodeId root, std::uint32_t j) {
            BlossomId sb = set_blossom_[root];
            if (sb == npos32) {
                NodeId v = set_base_[root];
                F.comp_node.push_back(v);
                F.comp_blossom.push_back(npos32);
                F.owner[v] = id;
                F.owner_index[v] = j;
                VState& vx = vs_[F.vertex[v]];
                vx.in_blossom = true;
                if (vx.last_occ == npos32 || v > vx.last_occ) vx.last_occ = v;
            } else {
                F.comp_node.push_back(npos32);
                F.comp_blossom.push_back(sb);
                F.blossoms[sb].parent = id;
                F.blossoms[sb].index_in_parent = j;
            }
        };
        add_comp(r0, 0);
        for (std::uint32_t j = 1; j <= rec.k; ++j) {
            NodeId a = path_[j - 1];
            F.arc_pool.push_back(a);
            F.arc_owner[a] = id;
            F.arc_index[a] = j;
            add_comp(dsu_.find(a), j);
        }
        NodeId root = r0;
        for (NodeId a : path_) root = dsu_.unite(root, a);
        set_base_[root] = rec.base;
        set_blossom_[root] = id;
        F.blossoms.push_back(rec);
        ++res_.stats.blossoms;
        if (opt_.trace) {
            *opt_.trace << "blossom " << id << " base node " << rec.base << " arcs";
            for (NodeId a : path_) *opt_.trace << " e" << F.edge[a];
            *opt_.trace << "\n";
        }
        return id;
    }

    void finish_frame() {
        Frame fr = stack_.back();
        stack_.pop_back();
        SearchForest& F = res_.forest;
        const VertexId x = F.vertex[fr.node];
        VState& xs = vs_[x];
        bl_.push(xs.bl, {fr.node, fr.arc, fr.up, fr.t, search_id_});
        ++xs.bl_count[ti(fr.t)];
        if (!xs.e1_set) {
            xs.e1_set = true;
            res_.e1[x] = {true, fr.node, fr.arc, fr.up, fr.t, search_id_, static_cast<std::uint32_t>(F.num_nodes())};
        }
        if (!fr.up) {
            NodeId r = dsu_.find(fr.node);
            if (set_blossom_[r] != npos32 && set_base_[r] == fr.node) F.blossoms[set_blossom_[r]].complete = true;
        }
        if (opt_.trace) *opt_.trace << "return " << x + 1 << " node " << fr.node << "\n";
        if (opt_.check) validate();
    }

    void augment(const Frame& fr) {
        SearchForest& F = res_.forest;
        AugmentRecord rec;
        rec.search = search_id_;
        rec.final_node = fr.node;
        rec.final_arc = fr.arc;
        rec.final_up = fr.up;
        rec.alpha = alpha_;
        rec.x = F.vertex[fr.node];
        NodeId b = set_base_[dsu_.find(fr.node)];
        while (F.parent[b] != npos32) {
            rec.tbar_arcs.push_back(b);
            b = set_base_[dsu_.find(F.parent[b])];
        }
        rec.root = b;
        std::reverse(rec.tbar_arcs.begin(), rec.tbar_arcs.end());
        --vs_[rec.alpha].def;
        --vs_[rec.x].def;
        if (opt_.trace) *opt_.trace << "augment " << rec.alpha + 1 << " .. " << rec.x + 1 << "\n";
        res_.trails.push_back(std::move(rec));
    }

    [[noreturn]] void fail(const std::string& what) {
        std::ostringstream os;
        os << "invariant violated: " << what << "\n";
        dump(os);
        throw InvariantError(os.str());
    }

    void dump(std::ostream& os) {
        const SearchForest& F = res_.forest;
        for (NodeId v = 0; v < F.num_nodes(); ++v) {
            os << "  node " << v << " vertex " << F.vertex[v] + 1 << " parent ";
            if (F.is_root(v))
                os << "-";
            else
                os << F.parent[v] << " e" << F.edge[v] << " " << to_string(F.type[v]);
            os << " set " << dsu_.find(v) << "\n";
        }
    }

    // Full structural check; quadratic overall, meant for small instances.
    void validate() {
        SearchForest& F = res_.forest;
        const std::size_t N = F.num_nodes();
        // one top-level blossom per vertex
        std::vector<NodeId> seen(g_.num_vertices(), npos32);
        for (NodeId v = 0; v < N; ++v) {
            NodeId r = dsu_.find(v);
            if (set_blossom_[r] == npos32) continue;
            VertexId x = F.vertex[v];
            if (seen[x] != npos32 && seen[x] != r) fail("vertex " + std::to_string(x + 1) + " in two blossoms");
            seen[x] = r;
        }
        for (NodeId v = 0; v < N; ++v) {
            NodeId r = dsu_.find(v);
            // subtree property
            if (v != set_base_[r]) {
                if (F.is_root(v) || dsu_.find(F.parent[v]) != r) fail("blossom set is not a subtree");
            } else if (!F.is_root(v) && dsu_.find(F.parent[v]) == r) {
                fail("set base has its parent inside the set");
            }
            // alternation at atomic nodes
            if (!F.is_root(v)) {
                NodeId p = F.parent[v];
                if (set_blossom_[dsu_.find(p)] == npos32 && F.type[v] == F.type[p])
                    fail("tree does not alternate at node " + std::to_string(p));
            }
            // arcs added after e1 returned stay pendant with type mu(e1)
            const E1Record& e1 = res_.e1[F.vertex[v]];
            if (e1.set && v >= e1.nodes_at_return && !F.is_root(v)) {
                if (F.children[v] != 0) fail("late occurrence of a labeled vertex has children");
                if (F.type[v] != e1.type) fail("late occurrence has the wrong M-type");
            }
        }
        for (BlossomId b = 0; b < F.blossoms.size(); ++b) {
            const BlossomRecord& rec = F.blossoms[b];
            if (rec.k == 0) fail("empty blossom cycle");
            for (std::uint32_t j = 1; j <= rec.k; ++j)
                if (F.comp_base(b, j) != F.cycle_arc(b, j)) fail("cycle arc does not enter its component base");
            for (std::uint32_t j = 1; j < rec.k; ++j)
                if (F.comp_atomic(b, j) != npos32 && F.type[F.cycle_arc(b, j)] == F.type[F.cycle_arc(b, j + 1)])
                    fail("blossom " + std::to_string(b) + " does not alternate at index " + std::to_string(j));
            if (F.comp_atomic(b, 0) != npos32) {
                NodeId a1 = F.cycle_arc(b, 1);
                if (F.tail(a1) != rec.base) fail("first cycle arc does not leave the base");
                if (rec.type != F.type[a1]) fail("blossom type differs from its first arc");
                if (rec.type == F.type[rec.base]) fail("base arc has the blossom type");
                if (F.comp_atomic(b, rec.k) != npos32 && F.type[F.cycle_arc(b, rec.k)] != rec.type)
                    fail("closing arc has the wrong M-type");
            }
        }
    }

    const Multigraph& g_;
    const Matching& m_;
    const EngineOptions& opt_;
    BlockingResult res_;
    std::vector<VState> vs_;
    std::vector<GLEntry> gl_;

    PooledQueues<BLEntry> bl_;

    UnionFind dsu_;
    std::vector<NodeId> set_base_;
    std::vector<BlossomId> set_blossom_;

    std::vector<Frame> stack_;
    std::vector<NodeId> path_;
    std::uint32_t search_id_ = 0;
    VertexId alpha_ = 0;
};

} // namespace detail

// One phase: a blocking set of augmenting trails for (g, f, m).
inline BlockingResult find_trails(const Multigraph& g, const DegreeBounds& f, const Matching& m,
                                  const EngineOptions& opt = {}) {
    return detail::TrailFinder(g, f, m, opt).run();
}

} // namespace ftrails
