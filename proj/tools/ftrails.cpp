#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <ftrails/certificate.hpp>
#include <ftrails/driver.hpp>
#include <ftrails/engine.hpp>
#include <ftrails/expand.hpp>
#include <ftrails/instance_io.hpp>
#include <ftrails/substitute.hpp>

using namespace ftrails;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_failed = 2;

Instance load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_instance(in);
}

void print_edges(const std::vector<EdgeId>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) std::cout << (i ? " " : "") << ids[i];
    std::cout << "\n";
}

int cmd_solve(const std::string& path, bool check, bool trace, const std::string& cert_out) {
    Instance inst = load(path);
    SolveOptions opt;
    opt.check = check;
    if (trace) opt.trace = &std::cerr;
    SolveReport rep = max_f_matching(inst.g, inst.f, inst.m, opt);
    std::cout << "size " << rep.matching.size() << "\n";
    std::cout << "matching";
    for (EdgeId e : rep.matching.edge_ids()) std::cout << " " << e;
    std::cout << "\nphases " << rep.phases.size() << "\n";
    if (!cert_out.empty()) {
        std::ofstream out(cert_out);
        if (!out) throw InputError("cannot write " + cert_out);
        write_certificate(out, rep.certificate);
    }
    if (!rep.certificate.ok()) {
        for (const auto& f : rep.certificate.failures) std::cout << "certificate failed: " << f << "\n";
        return exit_failed;
    }
    std::cout << "certificate ok bound " << rep.certificate.bound.value << "\n";
    return exit_ok;
}

int cmd_block(const std::string& path, bool check, bool trace) {
    Instance inst = load(path);
    EngineOptions opt;
    opt.check = check;
    if (trace) opt.trace = &std::cerr;
    BlockingResult r = find_trails(inst.g, inst.f, inst.m, opt);
    std::vector<GTrail> trails = expand_all(r);
    rematch(inst.g, inst.f, inst.m, trails); // throws if the set is not augmenting
    std::cout << "trails " << trails.size() << "\n";
    for (const GTrail& t : trails) print_edges(t.edge_ids());
    Certificate c = verify(inst.g, inst.m, r, trails);
    write_certificate(std::cout, c);
    if (!c.ok()) {
        for (const auto& f : c.failures) std::cout << "certificate failed: " << f << "\n";
        return exit_failed;
    }
    std::cout << "certificate ok\n";
    return exit_ok;
}

int cmd_certify(const std::string& path, const std::string& cert_path) {
    Instance inst = load(path);
    std::ifstream in(cert_path);
    if (!in) throw InputError("cannot open " + cert_path);
    CertificateFile cf = parse_certificate(in, inst.g.num_vertices());
    const std::size_t n = inst.g.num_vertices();
    std::vector<std::uint8_t> in_i(n, 0), in_o(n, 0);
    for (VertexId v : cf.inner) in_i[v] = 1;
    for (VertexId v : cf.outer) in_o[v] = 1;
    BoundValue bv = bound_value(inst.g, inst.f, in_i, in_o);
    std::cout << "bound " << bv.value << "\n";
    std::cout << "size " << inst.m.size() << "\n";
    if (cf.bound && *cf.bound != bv.value)
        std::cout << "note: file states bound " << *cf.bound << "\n";
    if (bv.value == static_cast<std::int64_t>(inst.m.size())) {
        std::cout << "optimal\n";
        return exit_ok;
    }
    std::cout << "not proven optimal\n";
    return exit_failed;
}

int cmd_substitute(const std::string& path, const std::string& blossom_path) {
    Instance inst = load(path);
    std::ifstream in(blossom_path);
    if (!in) throw InputError("cannot open " + blossom_path);
    auto list = parse_blossom_list(in);
    Substituted s = build_substitute(inst.g, inst.f, inst.m, list);
    std::cout << "c substituted instance; shadows";
    for (const auto& b : s.map.blossoms) std::cout << " " << b.shadow + 1;
    std::cout << "\n";
    write_instance(std::cout, {s.g, s.f, s.m});
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blocking augmenting trails and maximum f-matchings"};
    app.require_subcommand(1);

    std::string path, cert_out, cert_path, blossom_path;
    bool check = false, trace = false;

    auto* solve = app.add_subcommand("solve", "maximum f-matching with an optimality certificate");
    solve->add_option("file", path, "instance file")->required();
    solve->add_flag("--check", check, "validate search invariants after every step");
    solve->add_flag("--trace", trace, "log search events to stderr");
    solve->add_option("--cert-out", cert_out, "write the certificate here");

    auto* block = app.add_subcommand("block", "one phase: a blocking set of augmenting trails");
    block->add_option("file", path, "instance file")->required();
    block->add_flag("--check", check, "validate search invariants after every step");
    block->add_flag("--trace", trace, "log search events to stderr");

    auto* certify = app.add_subcommand("certify", "check an (I,O) certificate against the file's matching");
    certify->add_option("file", path, "instance file")->required();
    certify->add_option("cert", cert_path, "certificate file")->required();

    std::size_t n = 0, m = 0;
    int fmax = 1;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "random instance on stdout");
    gen->add_option("n", n, "vertices")->required();
    gen->add_option("m", m, "edges")->required();
    gen->add_option("fmax", fmax, "largest degree bound")->required()->check(CLI::PositiveNumber);
    gen->add_option("seed", seed, "random seed")->required();

    auto* subst = app.add_subcommand("substitute", "replace weighted blossoms by substitutes");
    subst->add_option("file", path, "instance file")->required();
    subst->add_option("blossoms", blossom_path, "blossom list")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*solve) return cmd_solve(path, check, trace, cert_out);
        if (*block) return cmd_block(path, check, trace);
        if (*certify) return cmd_certify(path, cert_path);
        if (*subst) return cmd_substitute(path, blossom_path);
        if (*gen) {
            write_instance(std::cout, generate(n, m, fmax, seed));
            return exit_ok;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_input;
}
