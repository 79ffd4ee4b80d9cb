#pragma once

#include "backorb/exactnum/poly.hpp"

namespace backorb::exactnum {

// Segments carry root valuations (the negated lower-hull slopes), listed in
// strictly increasing order.  A segment (v, l) certifies exactly l roots of
// p-adic valuation v in an algebraic closure of Q_p.  Roots at 0 are
// stripped first and reported as vanishing_order.
struct NewtonSegment {
    Rat valuation;
    unsigned long multiplicity;
};

struct NewtonPolygon {
    long vanishing_order = 0;
    std::vector<NewtonSegment> segments;
};

NewtonPolygon newton_polygon(const IntPoly& f, const Int& p);

// The full multiset of root valuations (vanishing order excluded),
// ascending, one entry per root.
std::vector<Rat> root_valuations(const IntPoly& f, const Int& p);

}  // namespace backorb::exactnum
