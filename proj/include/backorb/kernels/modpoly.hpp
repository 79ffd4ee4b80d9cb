#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "backorb/exactnum/poly.hpp"
#include "backorb/kernels/modp_kernels.hpp"

namespace backorb::kernels {

// Dense polynomials over F_p (p an odd prime or 2, p < 2^31), ascending
// coefficients in [0, p).  Pure value-semantics layer over the word kernels.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::vector<uint32_t> c, uint32_t p) : c_(std::move(c)), p_(p) { trim(); }
    static ModPoly from_int_poly(const IntPoly& f, uint32_t p);

    uint32_t modulus() const { return p_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    uint32_t leading() const { return c_.back(); }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

private:
    std::vector<uint32_t> c_;
    uint32_t p_ = 0;
};

uint32_t inv_mod(uint32_t a, uint32_t p);
uint32_t pow_mod_u32(uint32_t a, uint64_t e, uint32_t p);

ModPoly mp_add(const ModPoly& a, const ModPoly& b);
ModPoly mp_sub(const ModPoly& a, const ModPoly& b);
ModPoly mp_mul(const ModPoly& a, const ModPoly& b);
ModPoly mp_scale(const ModPoly& a, uint32_t w);
ModPoly mp_monic(const ModPoly& a);
void mp_divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
ModPoly mp_rem(const ModPoly& a, const ModPoly& b);
ModPoly mp_gcd(const ModPoly& a, const ModPoly& b);
ModPoly mp_derivative(const ModPoly& a);
// base^e mod f, exponent an arbitrary-precision integer
ModPoly mp_powmod(const ModPoly& base, const Int& e, const ModPoly& f);
uint32_t mp_eval(const ModPoly& a, uint32_t x);

ModPoly mp_monomial(uint32_t coeff, size_t k, uint32_t p);

// Complete factorization of a nonzero polynomial into monic irreducibles
// with multiplicity (plus the scalar leading unit), by squarefree split,
// distinct-degree, then Cantor-Zassenhaus equal-degree splitting (trace
// variant for p = 2).  Deterministically seeded.
struct ModFactor {
    ModPoly poly;
    unsigned multiplicity;
};
struct ModFactorization {
    uint32_t unit;
    std::vector<ModFactor> factors;
};
ModFactorization mp_factor(const ModPoly& f, uint64_t seed = 0x5eed);

// Resultant of nonzero a, b over F_p (Sylvester convention: a rows on top).
uint32_t mp_resultant(const ModPoly& a, const ModPoly& b);

}  // namespace backorb::kernels
