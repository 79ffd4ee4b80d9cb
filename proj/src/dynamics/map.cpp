#include "backorb/dynamics/map.hpp"

#include <algorithm>
#include <stdexcept>

#include "backorb/exactnum/resultant.hpp"
#include "backorb/kernels/modpoly.hpp"

namespace backorb::dynamics {

ProjPoint::ProjPoint(Int x, Int y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_ == 0 && y_ == 0) throw std::invalid_argument("(0,0) is not projective");
    Int g = gcd(x_, y_);
    if (g != 1) {
        mpz_divexact(x_.get_mpz_t(), x_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(y_.get_mpz_t(), y_.get_mpz_t(), g.get_mpz_t());
    }
    if (y_ < 0 || (y_ == 0 && x_ < 0)) {
        x_ = -x_;
        y_ = -y_;
    }
}

Rat ProjPoint::to_rational() const {
    if (is_infinity()) throw std::domain_error("point at infinity has no affine value");
    return exactnum::make_rat(x_, y_);
}

RationalMap::RationalMap(std::vector<Int> F, std::vector<Int> G)
    : F_(std::move(F)), G_(std::move(G)) {
    if (F_.size() != G_.size() || F_.size() < 3)
        throw std::invalid_argument("forms need equal length d+1 with d >= 2");
    d_ = static_cast<long>(F_.size()) - 1;
    Int c(0);
    for (const auto& a : F_) c = gcd(c, a);
    for (const auto& a : G_) c = gcd(c, a);
    if (c == 0) throw std::invalid_argument("zero map");
    if (c != 1) {
        for (auto& a : F_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        for (auto& a : G_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    }
    if (exactnum::resultant_forms(F_, G_, d_) == 0)
        throw std::invalid_argument("F and G share a projective root");
}

RationalMap RationalMap::from_fraction(const IntPoly& num, const IntPoly& den) {
    long d = std::max(num.degree(), den.degree());
    if (d < 2) throw std::invalid_argument("map degree must be >= 2");
    std::vector<Int> F(static_cast<size_t>(d) + 1, Int(0));
    std::vector<Int> G(static_cast<size_t>(d) + 1, Int(0));
    for (long i = 0; i <= num.degree(); ++i) F[static_cast<size_t>(i)] = num[static_cast<size_t>(i)];
    for (long i = 0; i <= den.degree(); ++i) G[static_cast<size_t>(i)] = den[static_cast<size_t>(i)];
    return RationalMap(std::move(F), std::move(G));
}

RationalMap RationalMap::power_map(long d) {
    if (d < 2) throw std::invalid_argument("power map degree must be >= 2");
    std::vector<Int> F(static_cast<size_t>(d) + 1, Int(0));
    std::vector<Int> G(static_cast<size_t>(d) + 1, Int(0));
    F.back() = 1;
    G.front() = 1;
    return RationalMap(std::move(F), std::move(G));
}

bool RationalMap::is_power_map() const {
    for (size_t i = 0; i < F_.size(); ++i) {
        if (i + 1 == F_.size()) {
            if (F_[i] != 1) return false;
        } else if (F_[i] != 0) {
            return false;
        }
        if (i == 0) {
            if (G_[i] != 1) return false;
        } else if (G_[i] != 0) {
            return false;
        }
    }
    return true;
}

bool RationalMap::is_polynomial() const {
    for (size_t i = 1; i < G_.size(); ++i)
        if (G_[i] != 0) return false;
    return true;
}

Int RationalMap::resultant() const { return exactnum::resultant_forms(F_, G_, d_); }

namespace {

Int eval_form(const std::vector<Int>& C, const Int& x, const Int& y) {
    size_t n = C.size();
    Int r(0), xp(1);
    std::vector<Int> yp(n);
    yp[n - 1] = 1;
    for (size_t i = n - 1; i > 0; --i) yp[i - 1] = yp[i] * y;
    for (size_t i = 0; i < n; ++i) {
        if (C[i] != 0) r += C[i] * xp * yp[i];
        xp *= x;
    }
    return r;
}

}  // namespace

ProjPoint evaluate(const RationalMap& phi, const ProjPoint& P) {
    return ProjPoint(eval_form(phi.F(), P.x(), P.y()), eval_form(phi.G(), P.x(), P.y()));
}

ProjPoint evaluate_iterate(const RationalMap& phi, unsigned long n, const ProjPoint& P) {
    ProjPoint Q = P;
    for (unsigned long i = 0; i < n; ++i) Q = evaluate(phi, Q);
    return Q;
}

IteratePair iterate_pair(const RationalMap& phi, unsigned long n, long degree_cap) {
    long d = phi.degree();
    long formal = 1;
    for (unsigned long i = 0; i < n; ++i) {
        if (formal > degree_cap / d) throw DegreeCapExceeded();
        formal *= d;
    }
    IntPoly f({Int(0), Int(1)});  // z
    IntPoly g = IntPoly::constant(1);
    long level_deg = 1;
    for (unsigned long i = 0; i < n; ++i) {
        // compose (f, g) with phi: next = (F(f,g), G(f,g)) where the forms
        // are evaluated as sum c_i f^i g^(d-i)
        std::vector<IntPoly> fp(static_cast<size_t>(d) + 1), gp(static_cast<size_t>(d) + 1);
        fp[0] = IntPoly::constant(1);
        gp[0] = IntPoly::constant(1);
        for (long j = 1; j <= d; ++j) {
            fp[static_cast<size_t>(j)] = exactnum::mul(fp[static_cast<size_t>(j - 1)], f);
            gp[static_cast<size_t>(j)] = exactnum::mul(gp[static_cast<size_t>(j - 1)], g);
        }
        IntPoly nf, ng;
        for (long j = 0; j <= d; ++j) {
            const Int& cF = phi.F()[static_cast<size_t>(j)];
            const Int& cG = phi.G()[static_cast<size_t>(j)];
            if (cF != 0)
                nf = exactnum::add(nf, exactnum::mul_scalar(
                                           exactnum::mul(fp[static_cast<size_t>(j)],
                                                         gp[static_cast<size_t>(d - j)]),
                                           cF));
            if (cG != 0)
                ng = exactnum::add(ng, exactnum::mul_scalar(
                                           exactnum::mul(fp[static_cast<size_t>(j)],
                                                         gp[static_cast<size_t>(d - j)]),
                                           cG));
        }
        Int c = gcd(exactnum::content(nf), exactnum::content(ng));
        if (c > 1) {
            f = IntPoly([&] {
                std::vector<Int> v(nf.coeffs());
                for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
                return v;
            }());
            g = IntPoly([&] {
                std::vector<Int> v(ng.coeffs());
                for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
                return v;
            }());
        } else {
            f = std::move(nf);
            g = std::move(ng);
        }
        level_deg *= d;
    }
    return {std::move(f), std::move(g), n, level_deg};
}

FiberPoly iterate_poly(const RationalMap& phi, unsigned long n, const Rat& beta, long degree_cap) {
    return fiber_poly_point(phi, n, false, beta, degree_cap);
}

FiberPoly fiber_poly_point(const RationalMap& phi, unsigned long n, bool at_infinity,
                           const Rat& beta, long degree_cap) {
    auto [f, g, level, formal] = iterate_pair(phi, n, degree_cap);
    IntPoly fiber;
    if (at_infinity) {
        fiber = g;
    } else {
        Int p(beta.get_num()), q(beta.get_den());
        fiber = exactnum::sub(exactnum::mul_scalar(f, q), exactnum::mul_scalar(g, p));
    }
    if (fiber.is_zero()) throw std::invalid_argument("degenerate fiber: beta absorbs the iterate");
    IntPoly prim = exactnum::primitive_positive(fiber);
    return {prim, formal - prim.degree()};
}

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n_in) {
    std::vector<std::pair<Int, unsigned>> out;
    Int n = abs(n_in);
    if (n <= 1) return out;
    while (n > 1) {
        Int p = exactnum::some_prime_factor(n);
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        out.emplace_back(p, e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<Int> bad_reduction_primes(const RationalMap& phi) {
    std::set<Int> bad;
    Int res = phi.resultant();
    for (auto& [p, e] : factor_integer(res)) {
        // confirm the degree drop mod p through the reduced forms: either
        // the dehomogenizations share a nonconstant gcd, or both forms lose
        // their top X-coefficient (a common root at infinity)
        if (p < (Int(1) << 31)) {
            uint32_t pu = static_cast<uint32_t>(p.get_ui());
            auto fz = kernels::ModPoly::from_int_poly(phi.f_poly(), pu);
            auto gz = kernels::ModPoly::from_int_poly(phi.g_poly(), pu);
            bool drop_at_inf = fz.degree() < phi.degree() && gz.degree() < phi.degree();
            bool affine_common =
                !fz.is_zero() && !gz.is_zero() && kernels::mp_gcd(fz, gz).degree() > 0;
            bool one_side_zero = fz.is_zero() || gz.is_zero();
            if (!(drop_at_inf || affine_common || one_side_zero))
                throw std::logic_error("resultant prime without degree drop");
        }
        bad.insert(p);
    }
    return bad;
}

}  // namespace backorb::dynamics
