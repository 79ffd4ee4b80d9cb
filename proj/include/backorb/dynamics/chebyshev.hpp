#pragma once

#include "backorb/exactnum/poly.hpp"

namespace backorb::dynamics {

// The monic integer T_d with T_d(w + 1/w) = w^d + w^{-d}; built by the
// three-term recurrence and re-verified symbolically.
IntPoly chebyshev(long d);

}  // namespace backorb::dynamics
