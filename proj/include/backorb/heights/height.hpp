#pragma once

#include "backorb/dynamics/map.hpp"

namespace backorb::heights {

// Natural-log heights.  Exact computations carry error_bound 0; numeric
// ones carry a rigorous bound.
struct HeightValue {
    double value;
    double error_bound;
};

// log max(|x|, |y|) for coprime coordinates; exact (error bound 0).
HeightValue height_point(const dynamics::ProjPoint& P);
double log_int(const Int& n);  // log |n|, n != 0

// A sound constant C with |h(phi(P)) - d h(P)| <= C for all rational P.
// Upper direction from 1-norms of the forms; lower direction from the
// integer cofactor identities A F + B G = D X^(2d-1) / D Y^(2d-1).
double height_commute_bound(const dynamics::RationalMap& phi);

// h(phi^n beta) / d^n for the least n with C/(d^n (d-1)) <= target_err;
// error_bound is that geometric tail (0 when C = 0).  Iterating a point
// grows digit counts rather than polynomial degrees, so the cap on d^n is
// far larger than the polynomial degree cap.
inline constexpr long kCanonicalIterCap = 1L << 40;
HeightValue canonical_height(const dynamics::RationalMap& phi, const dynamics::ProjPoint& beta,
                             double target_err, long iter_cap = kCanonicalIterCap);

}  // namespace backorb::heights
