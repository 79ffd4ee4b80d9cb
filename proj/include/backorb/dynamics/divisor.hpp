#pragma once

#include "backorb/dynamics/map.hpp"
#include "backorb/integrality/conjugate_class.hpp"

namespace backorb::dynamics {

using integrality::ConjugateClass;
using integrality::ProjClass;

// Formal integer combination of point classes on P^1.
class Divisor {
public:
    struct Term {
        ProjClass cls;
        long mult;
    };

    Divisor() = default;
    void add(const ProjClass& c, long mult);
    const std::vector<Term>& terms() const { return terms_; }
    bool effective() const;
    // total degree counted with multiplicity and class degrees
    long degree() const;

private:
    std::vector<Term> terms_;
};

// phi^*(beta): the fiber over beta with ramification multiplicities.
// Classes come from the irreducible factors of the fiber polynomial; a
// degree deficiency contributes the class at infinity.
Divisor pullback_divisor(const RationalMap& phi, const ProjPoint& beta);
Divisor pullback_divisor(const RationalMap& phi, const ProjClass& beta);

}  // namespace backorb::dynamics
