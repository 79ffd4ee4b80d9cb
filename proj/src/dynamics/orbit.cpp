#include "backorb/dynamics/orbit.hpp"

#include <map>

#include "backorb/exactnum/poly.hpp"
#include "backorb/heights/height.hpp"

namespace backorb::dynamics {

PreperiodicityResult is_preperiodic(const RationalMap& phi, const ProjPoint& beta) {
    // Once h(P) exceeds C/(d-1), heights strictly increase forever, so the
    // walk either closes a cycle among the finitely many low points or
    // escapes with a certificate.  Termination is Northcott's theorem.
    double C = heights::height_commute_bound(phi);
    double threshold = C / (phi.degree() - 1);
    std::map<ProjPoint, unsigned long> seen;
    std::vector<ProjPoint> path;
    ProjPoint P = beta;
    unsigned long k = 0;
    while (true) {
        auto it = seen.find(P);
        if (it != seen.end()) {
            PreperiodicityResult r;
            r.preperiodic = true;
            r.tail.assign(path.begin(), path.begin() + static_cast<long>(it->second));
            r.cycle.assign(path.begin() + static_cast<long>(it->second), path.end());
            return r;
        }
        double h = heights::height_point(P).value;
        if (h > threshold) {
            PreperiodicityResult r;
            r.preperiodic = false;
            r.escape_level = k;
            r.escape_height = h;
            r.escape_threshold = threshold;
            return r;
        }
        seen.emplace(P, k);
        path.push_back(P);
        P = evaluate(phi, P);
        ++k;
    }
}

namespace {

// squarefree fiber polynomial of phi^{-n}(alpha) plus an infinity flag
struct FiberSet {
    IntPoly poly;  // squarefree, primitive, positive lc
    bool contains_infinity;
};

FiberSet fiber_set(const RationalMap& phi, unsigned long n, const ProjPoint& alpha) {
    auto fp = fiber_poly_point(phi, n, alpha.is_infinity(),
                               alpha.is_infinity() ? Rat(0) : alpha.to_rational(),
                               kDefaultDegreeCap);
    return {exactnum::squarefree_part(fp.poly), fp.infinity_multiplicity > 0};
}

}  // namespace

bool is_exceptional(const RationalMap& phi, const ProjPoint& alpha) {
    // Distinct points in {alpha} u phi^-1(alpha) u phi^-2(alpha): merge the
    // squarefree fiber polynomials and the alpha / infinity markers, then
    // count degrees.
    FiberSet f1 = fiber_set(phi, 1, alpha);
    FiberSet f2 = fiber_set(phi, 2, alpha);
    IntPoly merged = exactnum::mul(f1.poly, f2.poly);
    if (!alpha.is_infinity()) {
        IntPoly lin({-alpha.x(), alpha.y()});
        merged = exactnum::mul(merged, lin);
    }
    IntPoly sf = exactnum::squarefree_part(merged);
    long count = std::max(sf.degree(), 0L);
    if (alpha.is_infinity() || f1.contains_infinity || f2.contains_infinity) ++count;
    return count <= 2;
}

std::vector<ProjPoint> forward_orbit(const RationalMap& phi, const ProjPoint& beta,
                                     unsigned long n) {
    std::vector<ProjPoint> orbit{beta};
    ProjPoint P = beta;
    for (unsigned long i = 0; i < n; ++i) {
        P = evaluate(phi, P);
        orbit.push_back(P);
    }
    return orbit;
}

}  // namespace backorb::dynamics
