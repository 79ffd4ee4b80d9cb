#pragma once

#include "backorb/exactnum/poly.hpp"

namespace backorb::integrality {

// One Galois orbit of algebraic numbers over Q, represented by its
// primitive irreducible minimal polynomial with positive leading
// coefficient.  Verdicts downstream depend only on this polynomial, never
// on a chosen root.
class ConjugateClass {
public:
    // certifies irreducibility through the factor module
    static ConjugateClass from_minpoly(const IntPoly& p);
    // trusts the caller (factorizer outputs are already certified)
    static ConjugateClass from_irreducible(IntPoly p);
    static ConjugateClass from_rational(const Rat& r);

    const IntPoly& minpoly() const { return poly_; }
    long degree() const { return poly_.degree(); }
    bool is_rational() const { return poly_.degree() == 1; }
    // -c0/c1 for degree-1 classes
    Rat rational_value() const;

    bool operator==(const ConjugateClass& o) const { return poly_ == o.poly_; }
    bool operator<(const ConjugateClass& o) const {
        if (poly_.degree() != o.poly_.degree()) return poly_.degree() < o.poly_.degree();
        return poly_.coeffs() < o.poly_.coeffs();
    }

private:
    explicit ConjugateClass(IntPoly p) : poly_(std::move(p)) {}
    IntPoly poly_;
};

// A point class on P^1: either a finite conjugate class or the point at
// infinity [1:0].
class ProjClass {
public:
    static ProjClass infinity() { return ProjClass(); }
    ProjClass(ConjugateClass c) : finite_(std::move(c)) {}  // NOLINT(implicit)
    static ProjClass rational(const Rat& r) { return ProjClass(ConjugateClass::from_rational(r)); }

    bool is_infinity() const { return !finite_.has_value(); }
    const ConjugateClass& cls() const { return *finite_; }
    long degree() const { return is_infinity() ? 1 : finite_->degree(); }

    bool operator==(const ProjClass& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return *finite_ == *o.finite_;
    }
    bool operator<(const ProjClass& o) const {
        if (is_infinity() != o.is_infinity()) return o.is_infinity();
        if (is_infinity()) return false;
        return *finite_ < *o.finite_;
    }

private:
    ProjClass() = default;
    std::optional<ConjugateClass> finite_;
};

}  // namespace backorb::integrality
