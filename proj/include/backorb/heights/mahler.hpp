#pragma once

#include <complex>

#include "backorb/heights/height.hpp"
#include "backorb/integrality/conjugate_class.hpp"

namespace backorb::heights {

struct RootFinderDidNotConverge : std::runtime_error {
    double achieved_bound;
    explicit RootFinderDidNotConverge(double achieved)
        : std::runtime_error("root finder did not reach the requested tolerance"),
          achieved_bound(achieved) {}
};

// All complex roots of a nonzero polynomial by Aberth-Ehrlich simultaneous
// iteration, with a posteriori inclusion radii n |f(z)| / |f'(z)|.
struct RootEstimates {
    std::vector<std::complex<double>> roots;
    std::vector<double> radii;
};
RootEstimates complex_roots(const IntPoly& f);

// log M(f) = log|lc| + sum log max(1, |root|), with a rigorous error bound.
HeightValue log_mahler_measure(const IntPoly& f);

// Height of a conjugate class: (1/deg) log M(minpoly).  Exact for rational
// classes; numeric with |value - true| <= error_bound <= tol otherwise.
HeightValue height_class(const integrality::ConjugateClass& gamma, double tol = 1e-12);

// deg(gamma) * canonical height of any root of the class.  Exact
// identification hhat = h holds for the power maps z^d, the only maps this
// artifact iterates over number fields.
double lehmer_ratio(const integrality::ConjugateClass& gamma, const dynamics::RationalMap& phi,
                    double tol = 1e-12);

}  // namespace backorb::heights
