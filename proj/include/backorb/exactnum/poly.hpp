#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "backorb/exactnum/rational.hpp"

namespace backorb {

// Dense univariate polynomial over Z, coefficients in ascending degree
// order.  The zero polynomial is the empty sequence; otherwise the leading
// coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const Int& a) { return IntPoly({a}); }
    // z^k
    static IntPoly monomial(const Int& a, size_t k);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& operator[](size_t i) const { return c_[i]; }
    Int coeff(size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const { return c_.back(); }

    std::vector<Int>& raw() { return c_; }
    void normalize();

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

private:
    std::vector<Int> c_;
};

namespace exactnum {

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly mul_scalar(const IntPoly& a, const Int& s);
IntPoly pow(const IntPoly& a, unsigned long e);

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return add(a, b); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return sub(a, b); }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }

// Exact division; throws if b does not divide a over Z.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
// Whether b | a over Q (degreewise rational division with zero remainder),
// quotient returned over Z only when it is integral.
bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly* quotient);

// Pseudo-division: lc(b)^(deg a - deg b + 1) a = q b + r.
void pseudo_divrem(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);

Int content(const IntPoly& a);
IntPoly primitive_part(const IntPoly& a);
// primitive part scaled so the leading coefficient is positive
IntPoly primitive_positive(const IntPoly& a);

IntPoly derivative(const IntPoly& a);
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& a);
// Yun decomposition: returns [(g_i, i)] with f = content * prod g_i^i,
// g_i primitive squarefree pairwise coprime.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& a);

// a(b(z))
IntPoly compose(const IntPoly& a, const IntPoly& b);
// a(z + s)
IntPoly taylor_shift(const IntPoly& a, const Int& s);
// b^deg(a) * a(z * n/d): rational root scaling with cleared denominators
IntPoly scale_arg(const IntPoly& a, const Rat& s);
// z^deg(a) * a(1/z)
IntPoly reverse(const IntPoly& a);

Int eval(const IntPoly& a, const Int& x);
Rat eval(const IntPoly& a, const Rat& x);
// Homogeneous evaluation: y^deg(a) * a(x/y).
Int eval_homogeneous(const IntPoly& a, const Int& x, const Int& y);

// Clears denominators of num/den coefficient pairs into a primitive
// IntPoly together with the rational unit u with u * result == input.
IntPoly clear_denominators(const std::vector<Rat>& coeffs, Rat* unit);

// Max |coefficient|.
Int height(const IntPoly& a);

}  // namespace exactnum
}  // namespace backorb
