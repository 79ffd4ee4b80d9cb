#pragma once

#include <optional>
#include <set>
#include <string>

#include "backorb/factor/factorize.hpp"

namespace backorb::factor {

// r with r^p = q when one exists in Q (sign-aware for odd p).
std::optional<Rat> is_pth_power(const Rat& q, unsigned long p);

// All rational b with b^k = beta for some 1 <= k <= n_max.
std::set<Rat> root_set(const Rat& beta, unsigned long n_max);

// Replayable record of how z^n - beta was factored.
//   kind: "cyclotomic" | "power-split" | "sophie-germain" | "norm-split" |
//         "binomial-leaf" | "norm-leaf" | "cyclotomic-scaled-leaf" | "general"
// A "general" step means the piece was handed to the general factorizer;
// this never happens for the inputs the binomial theory covers (it needs
// nested power coincidences inside a cyclotomic field).
struct CapelliStep {
    std::string kind;
    unsigned long prime = 0;   // peeled prime, 0 when not applicable
    Rat root;                  // extracted root (or the Sophie-Germain c)
    unsigned long residual = 0;  // exponent remaining after the step
};

struct CapelliTrace {
    std::vector<CapelliStep> steps;
    bool used_general_factorizer() const {
        for (const auto& s : steps)
            if (s.kind == "general") return true;
        return false;
    }
};

// Factors den(beta) * z^n - num(beta), the primitive integer model of
// z^n - beta, without the Zassenhaus machinery: cyclotomic products for
// beta = +-1, maximal power decomposition into per-divisor pieces,
// square/odd-prime peeling, the z^4 + 4c^4 identity, and exact q-th power
// tests in Z[i] / Z[zeta_3] for the quadratic-cyclotomic pieces.  Leaves
// are certified irreducible by Capelli's criterion over Q or over the
// imaginary quadratic field the piece lives in.
std::pair<Factorization, CapelliTrace> capelli_factor(unsigned long n, const Rat& beta);

}  // namespace backorb::factor
