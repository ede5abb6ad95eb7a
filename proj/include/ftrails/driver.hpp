#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "certificate.hpp"
#include "engine.hpp"
#include "expand.hpp"
#include "multigraph.hpp"

namespace ftrails {

struct PhaseReport {
    std::size_t trails = 0;
    std::size_t size_after = 0;
    EngineStats stats;
};

struct SolveReport {
    Matching matching;
    std::vector<PhaseReport> phases;
    Certificate certificate; // from the last phase, which finds no trails
};

struct SolveOptions {
    bool check = false;
    std::ostream* trace = nullptr;
    bool verify_every_phase = false;
    // called once per phase with the matching the phase started from
    std::function<void(const Matching&, const BlockingResult&, const std::vector<GTrail>&)> on_phase;
};

// Runs phases until one finds no augmenting trail.
inline SolveReport max_f_matching(const Multigraph& g, const DegreeBounds& f, const Matching& initial,
                                  const SolveOptions& opt = {}) {
    validate_matching(g, f, initial);
    EngineOptions eo;
    eo.check = opt.check;
    eo.trace = opt.trace;
    SolveReport rep;
    rep.matching = initial;
    for (;;) {
        if (opt.trace) *opt.trace << "phase " << rep.phases.size() << "\n";
        BlockingResult r = find_trails(g, f, rep.matching, eo);
        std::vector<GTrail> trails = expand_all(r);
        if (opt.on_phase) opt.on_phase(rep.matching, r, trails);
        bool last = trails.empty();
        if (last || opt.verify_every_phase || opt.check) {
            Certificate c = verify(g, rep.matching, r, trails);
            if (last) rep.certificate = std::move(c);
            else if (!c.ok()) throw InvariantError("phase certificate failed: " + c.failures.front());
        }
        PhaseReport pr;
        pr.trails = trails.size();
        pr.stats = r.stats;
        if (!last) rep.matching = rematch(g, f, rep.matching, trails);
        pr.size_after = rep.matching.size();
        rep.phases.push_back(pr);
        if (last) break;
    }
    return rep;
}

} // namespace ftrails
