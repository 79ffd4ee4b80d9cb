#include "backorb/exactnum/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace backorb {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const Int& a, size_t k) {
    if (a == 0) return IntPoly();
    std::vector<Int> v(k + 1, Int(0));
    v[k] = a;
    return IntPoly(std::move(v));
}

namespace exactnum {

IntPoly add(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) v[i] = a[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) v[i] += b[i];
    return IntPoly(std::move(v));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) v[i] = a[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) v[i] -= b[i];
    return IntPoly(std::move(v));
}

IntPoly neg(const IntPoly& a) {
    std::vector<Int> v(a.coeffs());
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            if (b[j] == 0) continue;
            v[i + j] += a[i] * b[j];
        }
    }
    return IntPoly(std::move(v));
}

IntPoly mul_scalar(const IntPoly& a, const Int& s) {
    if (s == 0) return IntPoly();
    std::vector<Int> v(a.coeffs());
    for (auto& x : v) x *= s;
    return IntPoly(std::move(v));
}

IntPoly pow(const IntPoly& a, unsigned long e) {
    IntPoly r = IntPoly::constant(1);
    IntPoly base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

void pseudo_divrem(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("pseudo division by zero");
    long da = a.degree(), db = b.degree();
    if (da < db) {
        q = IntPoly();
        r = a;
        return;
    }
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quo(static_cast<size_t>(da - db) + 1, Int(0));
    Int lb = b.leading();
    for (long k = da; k >= db; --k) {
        // invariant: lb^(da-k+1) * a == quo * b + rem after this pass
        Int t = rem[static_cast<size_t>(k)];
        for (auto& x : rem) x *= lb;
        for (auto& x : quo) x *= lb;
        quo[static_cast<size_t>(k - db)] += t;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= t * b[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(db) > 0 ? static_cast<size_t>(db) : 0);
    q = IntPoly(std::move(quo));
    r = IntPoly(std::move(rem));
}

bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly* quotient) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    long da = a.degree(), db = b.degree();
    if (da < db) return false;
    // synthetic division over Q, but bail out as soon as a coefficient
    // fails to be integral
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quo(static_cast<size_t>(da - db) + 1, Int(0));
    const Int& lb = b.leading();
    for (long k = da; k >= db; --k) {
        Int& t = rem[static_cast<size_t>(k)];
        if (t == 0) continue;
        if (!mpz_divisible_p(t.get_mpz_t(), lb.get_mpz_t())) return false;
        Int qc;
        mpz_divexact(qc.get_mpz_t(), t.get_mpz_t(), lb.get_mpz_t());
        quo[static_cast<size_t>(k - db)] = qc;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= qc * b[static_cast<size_t>(j)];
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(quo));
    return true;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!try_divide(a, b, &q)) throw std::domain_error("inexact polynomial division");
    return q;
}

Int content(const IntPoly& a) {
    Int g(0);
    for (const auto& x : a.coeffs()) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int c = content(a);
    std::vector<Int> v(a.coeffs());
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly primitive_positive(const IntPoly& a) {
    IntPoly p = primitive_part(a);
    if (!p.is_zero() && p.leading() < 0) p = neg(p);
    return p;
}

IntPoly derivative(const IntPoly& a) {
    if (a.degree() <= 0) return IntPoly();
    std::vector<Int> v(a.coeffs().size() - 1);
    for (size_t i = 1; i < a.coeffs().size(); ++i) v[i - 1] = a[i] * Int(i);
    return IntPoly(std::move(v));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    // primitive PRS; fine at the degrees this project handles
    if (a.is_zero()) return primitive_positive(b);
    if (b.is_zero()) return primitive_positive(a);
    IntPoly f = primitive_part(a), g = primitive_part(b);
    Int cont = ::backorb::exactnum::content(a);
    cont = gcd(cont, ::backorb::exactnum::content(b));
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly q, r;
        pseudo_divrem(f, g, q, r);
        f = g;
        g = primitive_part(r);
    }
    f = primitive_positive(f);
    return mul_scalar(f, cont);
}

IntPoly squarefree_part(const IntPoly& a) {
    if (a.degree() <= 0) return IntPoly::constant(1);
    IntPoly g = gcd(a, derivative(a));
    IntPoly q = divexact(mul_scalar(primitive_part(a), g.leading()), g);
    return primitive_positive(q);
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& a) {
    // Yun's algorithm on the primitive part.
    std::vector<std::pair<IntPoly, unsigned>> out;
    IntPoly f = primitive_positive(a);
    if (f.degree() <= 0) return out;
    IntPoly fp = derivative(f);
    IntPoly g = gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly w = divexact(f, g);
    IntPoly y = divexact(fp, g);
    unsigned i = 1;
    while (w.degree() > 0) {
        IntPoly z = sub(y, derivative(w));
        if (z.is_zero()) {
            out.emplace_back(primitive_positive(w), i);
            break;
        }
        IntPoly gi = gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(primitive_positive(gi), i);
        w = divexact(w, gi);
        y = divexact(z, gi);
        ++i;
    }
    return out;
}

IntPoly compose(const IntPoly& a, const IntPoly& b) {
    // Horner on the outer polynomial
    IntPoly r;
    for (long i = a.degree(); i >= 0; --i) {
        r = mul(r, b);
        r = add(r, IntPoly::constant(a[static_cast<size_t>(i)]));
    }
    return r;
}

IntPoly taylor_shift(const IntPoly& a, const Int& s) {
    IntPoly r;
    for (long i = a.degree(); i >= 0; --i) {
        // r = r*(z+s) + a_i, done in place
        std::vector<Int> v(r.coeffs().size() + 1, Int(0));
        for (size_t j = 0; j < r.coeffs().size(); ++j) {
            v[j + 1] += r[j];
            v[j] += r[j] * s;
        }
        v[0] += a[static_cast<size_t>(i)];
        r = IntPoly(std::move(v));
    }
    return r;
}

IntPoly scale_arg(const IntPoly& a, const Rat& s) {
    if (a.is_zero()) return a;
    size_t n = a.coeffs().size();
    Int num(s.get_num()), den(s.get_den());
    // den^deg * a(z*num/den): coefficient i picks num^i den^(deg-i)
    std::vector<Int> v(n);
    Int np(1);
    for (size_t i = 0; i < n; ++i) {
        Int dp;
        mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
        v[i] = a[i] * np * dp;
        np *= num;
    }
    return IntPoly(std::move(v));
}

IntPoly reverse(const IntPoly& a) {
    std::vector<Int> v(a.coeffs().rbegin(), a.coeffs().rend());
    return IntPoly(std::move(v));
}

Int eval(const IntPoly& a, const Int& x) {
    Int r(0);
    for (long i = a.degree(); i >= 0; --i) r = r * x + a[static_cast<size_t>(i)];
    return r;
}

Rat eval(const IntPoly& a, const Rat& x) {
    Rat r(0);
    for (long i = a.degree(); i >= 0; --i) r = r * x + Rat(a[static_cast<size_t>(i)]);
    return r;
}

Int eval_homogeneous(const IntPoly& a, const Int& x, const Int& y) {
    if (a.is_zero()) return Int(0);
    size_t n = a.coeffs().size();
    Int r(0), xp(1);
    std::vector<Int> yp(n);
    yp[n - 1] = 1;
    for (size_t i = n - 1; i > 0; --i) yp[i - 1] = yp[i] * y;
    for (size_t i = 0; i < n; ++i) {
        r += a[i] * xp * yp[i];
        xp *= x;
    }
    return r;
}

IntPoly clear_denominators(const std::vector<Rat>& coeffs, Rat* unit) {
    Int l(1);
    for (const auto& q : coeffs) l = lcm(l, Int(q.get_den()));
    std::vector<Int> v(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Rat t = coeffs[i] * Rat(l);
        v[i] = Int(t.get_num());
    }
    IntPoly p(std::move(v));
    Int c = content(p);
    IntPoly prim = primitive_part(p);
    bool flip = !prim.is_zero() && prim.leading() < 0;
    if (flip) prim = neg(prim);
    if (unit) {
        Rat u = make_rat(flip ? -c : c, l);
        *unit = u;
    }
    return prim;
}

Int height(const IntPoly& a) {
    Int h(0);
    for (const auto& x : a.coeffs()) h = std::max(h, Int(abs(x)));
    return h;
}

}  // namespace exactnum
}  // namespace backorb
