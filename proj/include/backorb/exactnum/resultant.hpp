#pragma once

#include "backorb/exactnum/poly.hpp"

namespace backorb::exactnum {

// Resultant of nonzero f, g.  Sign convention: determinant of the Sylvester
// matrix with f's coefficient rows on top (deg g rows of f, then deg f rows
// of g).  Computed by CRT over word-size primes against a Hadamard bound.
Int resultant(const IntPoly& f, const IntPoly& g);

// Same value via the subresultant PRS over Z; kept as an independent route
// for cross-checking.
Int resultant_prs(const IntPoly& f, const IntPoly& g);

// Resultant of two binary forms of common formal degree d, given as
// coefficient vectors c[i] * X^i * Y^(d-i) of length d+1.  Handles
// vanishing top coefficients (roots at infinity) via a fraction-free
// determinant of the full 2d x 2d Sylvester matrix.
Int resultant_forms(const std::vector<Int>& F, const std::vector<Int>& G, long d);

// R(w) = Res_z(B(z), A(z + w)).  Its roots are exactly the differences
// (root of A) - (root of B), each pair once; deg R = deg A * deg B and
// lc R = lc(B)^deg A * lc(A)^deg B.
IntPoly difference_resultant(const IntPoly& A, const IntPoly& B);

// b^deg(A) * A(z + a/b) as an integer polynomial.
IntPoly taylor_shift_rat(const IntPoly& A, const Int& a, const Int& b);

Int discriminant(const IntPoly& f);

}  // namespace backorb::exactnum
