#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ftrails {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t npos32 = std::numeric_limits<std::uint32_t>::max();

// M-type of an edge relative to the current matching.
enum class MType : std::uint8_t { matched = 0, unmatched = 1 };

constexpr MType flip(MType t) noexcept {
    return t == MType::matched ? MType::unmatched : MType::matched;
}

inline const char* to_string(MType t) noexcept {
    return t == MType::matched ? "matched" : "unmatched";
}

// malformed input (bad ids, bad bounds, bad matching)
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// a structural precondition of an operation does not hold
class StructuralError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// internal invariant broken; only raised by check mode or by hard assertions
class InvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    bool is_loop() const noexcept { return u == v; }
    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
};

// Undirected multigraph. Loops and parallel edges allowed, edges have stable ids.
class Multigraph {
  public:
    Multigraph() = default;
    explicit Multigraph(std::size_t n) : n_(n) {}

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    VertexId add_vertex() {
        adj_valid_ = false;
        return static_cast<VertexId>(n_++);
    }

    EdgeId add_edge(VertexId u, VertexId v) {
        if (u >= n_ || v >= n_)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        edges_.push_back({u, v});
        adj_valid_ = false;
        return static_cast<EdgeId>(edges_.size() - 1);
    }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // incident edge ids of x; a loop is listed once
    std::pair<const EdgeId*, const EdgeId*> incident(VertexId x) const {
        build_adjacency();
        return {adj_.data() + off_[x], adj_.data() + off_[x + 1]};
    }

  private:
    void build_adjacency() const {
        if (adj_valid_) return;
        off_.assign(n_ + 2, 0);
        for (const Edge& e : edges_) {
            ++off_[e.u + 2];
            if (!e.is_loop()) ++off_[e.v + 2];
        }
        for (std::size_t i = 2; i < off_.size(); ++i) off_[i] += off_[i - 1];
        adj_.resize(off_.back());
        for (EdgeId id = 0; id < edges_.size(); ++id) {
            const Edge& e = edges_[id];
            adj_[off_[e.u + 1]++] = id;
            if (!e.is_loop()) adj_[off_[e.v + 1]++] = id;
        }
        adj_valid_ = true;
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    mutable std::vector<std::size_t> off_;
    mutable std::vector<EdgeId> adj_;
    mutable bool adj_valid_ = false;
};

using DegreeBounds = std::vector<int>;

// Edge set stored as a membership vector over edge ids.
class Matching {
  public:
    Matching() = default;
    explicit Matching(std::size_t num_edges) : in_(num_edges, 0) {}

    bool contains(EdgeId e) const noexcept { return e < in_.size() && in_[e]; }
    MType type(EdgeId e) const noexcept { return contains(e) ? MType::matched : MType::unmatched; }

    void insert(EdgeId e) {
        grow(e);
        if (!in_[e]) {
            in_[e] = 1;
            ++size_;
        }
    }
    void erase(EdgeId e) {
        if (contains(e)) {
            in_[e] = 0;
            --size_;
        }
    }
    void toggle(EdgeId e) {
        if (contains(e))
            erase(e);
        else
            insert(e);
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t capacity() const noexcept { return in_.size(); }

    std::vector<EdgeId> edge_ids() const {
        std::vector<EdgeId> out;
        out.reserve(size_);
        for (EdgeId e = 0; e < in_.size(); ++e)
            if (in_[e]) out.push_back(e);
        return out;
    }

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.edge_ids() == b.edge_ids();
    }

  private:
    void grow(EdgeId e) {
        if (e >= in_.size()) in_.resize(std::size_t(e) + 1, 0);
    }

    std::vector<std::uint8_t> in_;
    std::size_t size_ = 0;
};

inline std::size_t matching_size(const Matching& m) { return m.size(); }

// |δ(x,M)| + 2|γ(x,M)|
inline std::vector<int> matched_degrees(const Multigraph& g, const Matching& m) {
    std::vector<int> d(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!m.contains(e)) continue;
        const Edge& ed = g.edge(e);
        ++d[ed.u];
        ++d[ed.v];
    }
    return d;
}

inline void validate_bounds(const Multigraph& g, const DegreeBounds& f) {
    if (f.size() != g.num_vertices())
        throw InputError("degree bound vector has " + std::to_string(f.size()) +
                         " entries, graph has " + std::to_string(g.num_vertices()) + " vertices");
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] < 0) throw InputError("negative degree bound at vertex " + std::to_string(v));
}

// vertices whose bound m exceeds
inline std::vector<VertexId> matching_violations(const Multigraph& g, const DegreeBounds& f, const Matching& m) {
    validate_bounds(g, f);
    std::vector<VertexId> out;
    for (EdgeId e : m.edge_ids())
        if (e >= g.num_edges()) throw InputError("matched edge id out of range: " + std::to_string(e));
    auto d = matched_degrees(g, m);
    for (VertexId v = 0; v < d.size(); ++v)
        if (d[v] > f[v]) out.push_back(v);
    return out;
}

inline void validate_matching(const Multigraph& g, const DegreeBounds& f, const Matching& m) {
    validate_bounds(g, f);
    for (EdgeId e : m.edge_ids())
        if (e >= g.num_edges()) throw InputError("matched edge id out of range: " + std::to_string(e));
    auto d = matched_degrees(g, m);
    for (std::size_t v = 0; v < d.size(); ++v)
        if (d[v] > f[v])
            throw InputError("matching exceeds bound at vertex " + std::to_string(v) + " (" +
                             std::to_string(d[v]) + " > " + std::to_string(f[v]) + ")");
}

// def(x) = f(x) - |δ(x,M)| - 2|γ(x,M)|
inline std::vector<int> deficiency(const Multigraph& g, const DegreeBounds& f, const Matching& m) {
    validate_matching(g, f, m);
    auto d = matched_degrees(g, m);
    std::vector<int> def(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) def[v] = f[v] - d[v];
    return def;
}

inline int deficiency(const Multigraph& g, const DegreeBounds& f, const Matching& m, VertexId v) {
    return deficiency(g, f, m).at(v);
}

} // namespace ftrails
