#pragma once

#include "backorb/dynamics/divisor.hpp"
#include "backorb/integrality/chordal.hpp"
#include "backorb/integrality/conjugate_class.hpp"

namespace backorb::integrality {

// Auditable outcome of a relative S-integrality test.  A witness is present
// exactly when the verdict is negative.
struct IntegralityWitness {
    Int prime;
    // "difference" : some |sigma(gamma) - tau(alpha)|_p < 1 with
    //                |tau(alpha)|_p <= 1
    // "nonintegral-conjugate" : some |sigma(gamma)|_p > 1 while some
    //                |tau(alpha)|_p > 1
    std::string branch;
    Rat slope;  // the offending valuation
    // The verdict is always exact; extracting a *prime* witness requires
    // factoring the violating modulus, which is budget-bounded.  When the
    // budget runs out, `prime` holds a composite divisor and this is false.
    bool prime_certified = true;
};

struct IntegralityVerdict {
    bool integral;
    std::optional<IntegralityWitness> witness;
};

// Exact multiset {v_p(sigma(gamma) - tau(alpha))} over all conjugate pairs,
// ascending.  Rational alpha goes through the Newton polygon of the shifted
// minimal polynomial; general alpha through the difference resultant.
std::vector<Rat> conjugate_difference_valuations(const ConjugateClass& gamma,
                                                 const ConjugateClass& alpha, const Int& p);

// Relative S-integrality of whole conjugate classes (the affine two-branch
// criterion, embedding-independent by construction).  Only primes dividing
// the pair resultant or a leading coefficient can violate, so the decision
// is exact without ever enumerating places.
IntegralityVerdict is_S_integral(const ProjClass& gamma, const ProjClass& alpha,
                                 const PlaceSet& S);

// Divisor form, defined for effective divisors only (termwise, since local
// heights are nonnegative); non-effective input is rejected.
IntegralityVerdict is_S_integral_divisor(const ProjClass& gamma, const dynamics::Divisor& delta,
                                         const PlaceSet& S);

// Same decision on a whole root set given by a squarefree primitive
// polynomial A (not necessarily irreducible): the verdict covers every
// Galois class inside A simultaneously, since the criterion quantifies
// over all conjugate pairs.
IntegralityVerdict is_S_integral_rootset(const IntPoly& A, const ProjClass& alpha,
                                         const PlaceSet& S);

// lambda_{P,p}(phi(Q)) == lambda_{phi^*(P),p}(Q) at a good-reduction prime,
// compared exactly as integer valuations (both sides divided by log p).
// Throws on a bad-reduction prime or phi(Q) = P.
bool check_projection_formula(const dynamics::RationalMap& phi, const dynamics::ProjPoint& P,
                              const dynamics::ProjPoint& Q, const Int& p);

// The two sides of the projection formula as integer valuations, exposed
// for the equivalence tests.
long projection_lhs_valuation(const dynamics::RationalMap& phi, const dynamics::ProjPoint& P,
                              const dynamics::ProjPoint& Q, const Int& p);
long projection_rhs_valuation(const dynamics::RationalMap& phi, const dynamics::ProjPoint& P,
                              const dynamics::ProjPoint& Q, const Int& p);

// Sum of local heights of Q against all conjugates in a class, as the
// exact valuation v_p(A~(x, y)) of the homogenized minimal polynomial.
long class_local_height_valuation(const ProjClass& cls, const dynamics::ProjPoint& Q,
                                  const Int& p);

}  // namespace backorb::integrality
