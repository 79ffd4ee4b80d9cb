#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace backorb {

using Int = mpz_class;
using Rat = mpq_class;

namespace exactnum {

// Thrown by valuation(0, p) and friends; callers that want +infinity
// semantics must handle the degenerate case themselves.
struct ValuationOfZero : std::domain_error {
    ValuationOfZero() : std::domain_error("valuation of zero undefined") {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s);

// v_p(n) for a nonzero integer.
long valuation(const Int& n, const Int& p);

// v_p(q), normalized so |p|_p = 1/p, i.e. |q|_p = p^{-valuation(q,p)}.
long valuation(const Rat& q, const Int& p);

// Largest e >= 1 with q an e-th power in Q, together with a canonical
// e-th root u (u > 0 whenever e is even).  q must not be 0 or +-1.
struct PowerDecomposition {
    unsigned long exponent;
    Rat base;
};
PowerDecomposition max_power_decomposition(const Rat& q);

// Exact p-th root in Q if one exists (sign-aware for odd p).
std::optional<Rat> rat_nth_root(const Rat& q, unsigned long n);

// Divides out of |n| every prime that divides any element of `moduli`,
// returning the stripped absolute value.  Used for S-unit style tests.
Int strip_factors(Int n, const std::vector<Int>& moduli);

// A nontrivial divisor of |n| > 1: trial division, perfect-power reduction,
// then Pollard rho within an iteration budget.  `prime` reports whether the
// divisor is (probabilistically) prime; huge semiprime-style inputs may
// exhaust the budget and yield a composite divisor.
struct FactorProbe {
    Int divisor;
    bool prime;
};
FactorProbe probe_prime_factor(const Int& n, unsigned long rho_budget = 1ul << 21);

// A prime factor (the smallest when it lies below the trial-division
// bound); throws on budget exhaustion.  Reserve for desk-scale inputs.
Int some_prime_factor(const Int& n);

bool is_probable_prime(const Int& n);

}  // namespace exactnum
}  // namespace backorb
