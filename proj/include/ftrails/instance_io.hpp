#pragma once

// Text formats.
//
//   c comment
//   p ftrails <n> <m>
//   f <v> <bound>      default bound is 1
//   e <u> <v>          one line per parallel copy, edge ids count from 0
//   m <edge-id>        initial matching
//
// Vertices are numbered from 1 in files.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "multigraph.hpp"

namespace ftrails {

struct Instance {
    Multigraph g;
    DegreeBounds f;
    Matching m;
};

namespace detail {

inline std::uint64_t read_number(std::istringstream& ls, std::size_t line, const char* what) {
    long long v;
    if (!(ls >> v)) throw InputError("line " + std::to_string(line) + ": expected " + what);
    if (v < 0) throw InputError("line " + std::to_string(line) + ": negative " + what);
    return static_cast<std::uint64_t>(v);
}

inline void expect_end(std::istringstream& ls, std::size_t line) {
    std::string extra;
    if (ls >> extra) throw InputError("line " + std::to_string(line) + ": trailing text '" + extra + "'");
}

} // namespace detail

inline Instance parse_instance(std::istream& in) {
    Instance inst;
    bool header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<std::uint64_t> matched;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        std::istringstream ls(text);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (header) throw InputError("line " + std::to_string(line) + ": second header");
            if (!(ls >> kind) || kind != "ftrails") throw InputError("line " + std::to_string(line) + ": bad header");
            n = detail::read_number(ls, line, "vertex count");
            m = detail::read_number(ls, line, "edge count");
            detail::expect_end(ls, line);
            if (n >= npos32 || m >= npos32) throw InputError("instance too large");
            inst.g = Multigraph(n);
            inst.f.assign(n, 1);
            header = true;
            continue;
        }
        if (!header) throw InputError("line " + std::to_string(line) + ": data before header");
        if (tag == "f") {
            auto v = detail::read_number(ls, line, "vertex");
            auto b = detail::read_number(ls, line, "bound");
            detail::expect_end(ls, line);
            if (v < 1 || v > n) throw InputError("line " + std::to_string(line) + ": vertex out of range");
            if (b > 1000000000) throw InputError("line " + std::to_string(line) + ": bound too large");
            inst.f[v - 1] = static_cast<int>(b);
        } else if (tag == "e") {
            auto u = detail::read_number(ls, line, "endpoint");
            auto v = detail::read_number(ls, line, "endpoint");
            detail::expect_end(ls, line);
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("line " + std::to_string(line) + ": endpoint out of range");
            inst.g.add_edge(VertexId(u - 1), VertexId(v - 1));
        } else if (tag == "m") {
            matched.push_back(detail::read_number(ls, line, "edge id"));
            detail::expect_end(ls, line);
        } else {
            throw InputError("line " + std::to_string(line) + ": unknown record '" + tag + "'");
        }
    }
    if (!header) throw InputError("missing 'p ftrails' header");
    if (inst.g.num_edges() != m)
        throw InputError("header promises " + std::to_string(m) + " edges, found " +
                         std::to_string(inst.g.num_edges()));
    inst.m = Matching(m);
    for (auto e : matched) {
        if (e >= m) throw InputError("matched edge id " + std::to_string(e) + " out of range");
        if (inst.m.contains(EdgeId(e))) throw InputError("edge " + std::to_string(e) + " matched twice");
        inst.m.insert(EdgeId(e));
    }
    validate_matching(inst.g, inst.f, inst.m);
    return inst;
}

inline Instance parse_instance_string(const std::string& s) {
    std::istringstream in(s);
    return parse_instance(in);
}

inline void write_instance(std::ostream& out, const Instance& inst) {
    out << "p ftrails " << inst.g.num_vertices() << " " << inst.g.num_edges() << "\n";
    for (VertexId v = 0; v < inst.f.size(); ++v)
        if (inst.f[v] != 1) out << "f " << v + 1 << " " << inst.f[v] << "\n";
    for (const Edge& e : inst.g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    for (EdgeId e : inst.m.edge_ids()) out << "m " << e << "\n";
}

// Random multigraph; loops and parallel edges occur naturally.
inline Instance generate(std::size_t n, std::size_t m, int fmax, std::uint64_t seed) {
    if (n == 0 && m > 0) throw InputError("cannot place edges on an empty vertex set");
    if (fmax < 1) throw InputError("fmax must be at least 1");
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.g = Multigraph(n);
    inst.f.resize(n);
    for (auto& b : inst.f) b = 1 + static_cast<int>(rng() % std::uint64_t(fmax));
    for (std::size_t i = 0; i < m; ++i) {
        auto u = VertexId(rng() % n), v = VertexId(rng() % n);
        inst.g.add_edge(u, v);
    }
    inst.m = Matching(m);
    return inst;
}

// Greedy f-matching over the edges in a random order.
template <class Rng>
Matching random_greedy_matching(const Multigraph& g, const DegreeBounds& f, Rng& rng) {
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), EdgeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> room(f.begin(), f.end());
    Matching m(g.num_edges());
    for (EdgeId e : order) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop() ? room[ed.u] < 2 : (room[ed.u] < 1 || room[ed.v] < 1)) continue;
        --room[ed.u];
        --room[ed.v];
        m.insert(e);
    }
    return m;
}

struct CertificateFile {
    std::vector<VertexId> inner, outer;
    std::optional<std::int64_t> bound;
};

inline void write_certificate(std::ostream& out, const Certificate& c) {
    out << "I";
    for (VertexId v : c.inner) out << " " << v + 1;
    out << "\nO";
    for (VertexId v : c.outer) out << " " << v + 1;
    out << "\n";
    for (std::size_t k = 0; k < c.bound.components.size(); ++k) {
        out << "C " << k + 1 << ":";
        for (VertexId v : c.bound.components[k]) out << " " << v + 1;
        out << "\n";
    }
    out << "bound " << c.bound.value << "\n";
    out << "residual " << c.residual_size << "\n";
}

inline CertificateFile parse_certificate(std::istream& in, std::size_t n) {
    CertificateFile c;
    std::string text;
    std::size_t line = 0;
    bool seen_i = false, seen_o = false;
    while (std::getline(in, text)) {
        ++line;
        std::istringstream ls(text);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "I" || tag == "O") {
            bool& seen = tag == "I" ? seen_i : seen_o;
            if (seen) throw InputError("line " + std::to_string(line) + ": repeated " + tag + " list");
            seen = true;
            auto& dst = tag == "I" ? c.inner : c.outer;
            long long v;
            while (ls >> v) {
                if (v < 1 || std::uint64_t(v) > n) throw InputError("line " + std::to_string(line) + ": vertex out of range");
                dst.push_back(VertexId(v - 1));
            }
            if (!ls.eof()) throw InputError("line " + std::to_string(line) + ": bad vertex list");
        } else if (tag == "bound") {
            long long b;
            if (!(ls >> b)) throw InputError("line " + std::to_string(line) + ": bad bound");
            c.bound = b;
        } else if (tag == "C" || tag == "residual") {
            continue; // recomputed
        } else {
            throw InputError("line " + std::to_string(line) + ": unknown record '" + tag + "'");
        }
    }
    if (!seen_i || !seen_o) throw InputError("certificate needs both an I and an O line");
    return c;
}

} // namespace ftrails
