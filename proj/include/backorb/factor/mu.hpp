#pragma once

#include "backorb/dynamics/map.hpp"
#include "backorb/factor/capelli.hpp"

namespace backorb::factor {

// mu_{phi,beta}(n): the number of DISTINCT irreducible factors of the
// level-n fiber polynomial f_n - beta g_n over Q, i.e. the number of
// Galois orbits in phi^{-n}(beta).  Power maps take the Capelli fast path.
long mu(const dynamics::RationalMap& phi, const Rat& beta, unsigned long n,
        long degree_cap = dynamics::kDefaultDegreeCap);

struct MuRow {
    unsigned long n;
    long mu;
};
struct MuTable {
    std::vector<MuRow> rows;
    bool nondecreasing;
    // least n with mu stable through n_max, or 0 when never stable
    unsigned long stabilizes_at;
};

// mu for n = 1..n_max; rows may be evaluated in parallel.
MuTable mu_table(const dynamics::RationalMap& phi, const Rat& beta, unsigned long n_max,
                 long degree_cap = dynamics::kDefaultDegreeCap, unsigned threads = 1);

}  // namespace backorb::factor
