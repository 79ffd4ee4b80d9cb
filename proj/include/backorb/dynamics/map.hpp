#pragma once

#include <set>

#include "backorb/exactnum/poly.hpp"

namespace backorb::dynamics {

// A rational projective point in coprime-integer coordinates, normalized so
// y >= 0 and x > 0 when y = 0.  [1:0] is the point at infinity.
class ProjPoint {
public:
    ProjPoint(Int x, Int y);
    static ProjPoint infinity() { return ProjPoint(Int(1), Int(0)); }
    static ProjPoint from_rational(const Rat& r) {
        return ProjPoint(Int(r.get_num()), Int(r.get_den()));
    }

    const Int& x() const { return x_; }
    const Int& y() const { return y_; }
    bool is_infinity() const { return y_ == 0; }
    Rat to_rational() const;

    bool operator==(const ProjPoint& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator<(const ProjPoint& o) const {
        return x_ < o.x_ || (x_ == o.x_ && y_ < o.y_);
    }

private:
    Int x_, y_;
};

struct DegreeCapExceeded : std::runtime_error {
    DegreeCapExceeded() : std::runtime_error("iterate exceeds the configured degree cap") {}
};

// Degree-d self-map of P^1 in normalized form: coprime integer forms
// F, G of common degree d >= 2 (stored ascending in X, so F[i] is the
// coefficient of X^i Y^(d-i)), joint content 1, Res(F, G) != 0.
class RationalMap {
public:
    RationalMap(std::vector<Int> F, std::vector<Int> G);
    // builds [num(z) : den(z)] homogenized to max degree
    static RationalMap from_fraction(const IntPoly& num, const IntPoly& den);
    // the power map z^d
    static RationalMap power_map(long d);

    long degree() const { return d_; }
    const std::vector<Int>& F() const { return F_; }
    const std::vector<Int>& G() const { return G_; }
    // dehomogenizations f(z) = F(z,1), g(z) = G(z,1)
    IntPoly f_poly() const { return IntPoly(F_); }
    IntPoly g_poly() const { return IntPoly(G_); }
    bool is_power_map() const;
    bool is_polynomial() const;  // G = c * Y^d

    Int resultant() const;

    bool operator==(const RationalMap& o) const { return F_ == o.F_ && G_ == o.G_; }

private:
    std::vector<Int> F_, G_;
    long d_;
};

ProjPoint evaluate(const RationalMap& phi, const ProjPoint& P);
ProjPoint evaluate_iterate(const RationalMap& phi, unsigned long n, const ProjPoint& P);

// Dehomogenized iterate pair (f_n, g_n) with phi^n = f_n / g_n, jointly
// primitive; degree cap guards the d^n blowup.
struct IteratePair {
    IntPoly f, g;
    unsigned long level;
    long formal_degree;  // d^n
};
IteratePair iterate_pair(const RationalMap& phi, unsigned long n, long degree_cap);

// primitive integer polynomial with roots exactly phi^{-n}(beta); its
// degree deficiency against d^n is the multiplicity of infinity in the
// fiber
struct FiberPoly {
    IntPoly poly;
    long infinity_multiplicity;
};
FiberPoly iterate_poly(const RationalMap& phi, unsigned long n, const Rat& beta, long degree_cap);
FiberPoly fiber_poly_point(const RationalMap& phi, unsigned long n, bool at_infinity,
                           const Rat& beta, long degree_cap);

std::set<Int> bad_reduction_primes(const RationalMap& phi);

// prime factorization of |n| by trial division and Pollard rho
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

inline constexpr long kDefaultDegreeCap = 4096;

}  // namespace backorb::dynamics
