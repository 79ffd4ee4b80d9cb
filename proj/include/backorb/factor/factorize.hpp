#pragma once

#include <utility>
#include <vector>

#include "backorb/exactnum/poly.hpp"

namespace backorb::factor {

// Complete factorization over Q.  Factors are primitive irreducible with
// positive leading coefficient and pairwise distinct; the rational unit
// satisfies unit * prod(poly_i ^ mult_i) == input exactly.
struct FactorTerm {
    IntPoly poly;
    unsigned multiplicity;
};

struct Factorization {
    Rat unit{1};
    std::vector<FactorTerm> factors;

    long factor_count_distinct() const { return static_cast<long>(factors.size()); }
    IntPoly expand() const;
    // canonical order: by degree, then coefficient sequence
    void sort();
};

// Zassenhaus pipeline: content/squarefree split, factorization modulo a
// good prime, quadratic Hensel lifting to a Landau-Mignotte style bound,
// subset recombination with degree and trailing-coefficient pruning.
Factorization factor_over_Q(const IntPoly& f);

// Same contract with the unit tracking a rational input u0 * f.
Factorization factor_rational_poly(const IntPoly& f, const Rat& u0);

bool is_irreducible(const IntPoly& f);

// All rational roots of a nonzero polynomial, without running the full
// factorizer: squarefree reduction, roots modulo a good word-size prime,
// Newton lifting, and rational reconstruction with exact verification.
std::vector<Rat> rational_roots(const IntPoly& f);

}  // namespace backorb::factor
