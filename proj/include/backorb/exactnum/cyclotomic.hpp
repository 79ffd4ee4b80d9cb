#pragma once

#include "backorb/exactnum/poly.hpp"

namespace backorb::exactnum {

// m-th cyclotomic polynomial, exact.
IntPoly cyclotomic(unsigned long m);

std::vector<unsigned long> divisors(unsigned long n);

}  // namespace backorb::exactnum
