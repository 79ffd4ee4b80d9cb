#pragma once

#include <optional>

#include "backorb/dynamics/map.hpp"

namespace backorb::dynamics {

// Verdict of the exact preperiodicity decision.  Preperiodic points carry
// the tail and cycle; wandering points carry a height-escape certificate
// h(phi^k beta) > C(phi)/(d-1), after which heights increase forever.
struct PreperiodicityResult {
    bool preperiodic;
    std::vector<ProjPoint> tail;
    std::vector<ProjPoint> cycle;
    // escape certificate
    unsigned long escape_level = 0;
    double escape_height = 0;
    double escape_threshold = 0;
};

PreperiodicityResult is_preperiodic(const RationalMap& phi, const ProjPoint& beta);

// true iff the backward orbit is finite: |{beta} u phi^-1 u phi^-2| <= 2
// counted over the algebraic closure via squarefree fiber polynomials
bool is_exceptional(const RationalMap& phi, const ProjPoint& alpha);

std::vector<ProjPoint> forward_orbit(const RationalMap& phi, const ProjPoint& beta,
                                     unsigned long n);

}  // namespace backorb::dynamics
