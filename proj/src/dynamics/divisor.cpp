#include "backorb/dynamics/divisor.hpp"

#include <algorithm>

#include "backorb/factor/factorize.hpp"

namespace backorb::dynamics {

void Divisor::add(const ProjClass& c, long mult) {
    if (mult == 0) return;
    for (auto& t : terms_) {
        if (t.cls == c) {
            t.mult += mult;
            if (t.mult == 0)
                terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                            [&](const Term& u) { return u.mult == 0; }),
                             terms_.end());
            return;
        }
    }
    terms_.push_back({c, mult});
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.cls < b.cls; });
}

bool Divisor::effective() const {
    for (const auto& t : terms_)
        if (t.mult < 0) return false;
    return true;
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& t : terms_) d += t.mult * t.cls.degree();
    return d;
}

namespace {

Divisor pullback_of_fiber(const IntPoly& fiber, long formal_degree) {
    Divisor div;
    auto fac = factor::factor_over_Q(fiber);
    for (const auto& t : fac.factors)
        div.add(ProjClass(ConjugateClass::from_irreducible(t.poly)),
                static_cast<long>(t.multiplicity));
    long deficiency = formal_degree - fiber.degree();
    if (deficiency > 0) div.add(ProjClass::infinity(), deficiency);
    return div;
}

}  // namespace

Divisor pullback_divisor(const RationalMap& phi, const ProjPoint& beta) {
    IntPoly fiber;
    if (beta.is_infinity()) {
        fiber = phi.g_poly();
    } else {
        fiber = exactnum::sub(exactnum::mul_scalar(phi.f_poly(), beta.y()),
                              exactnum::mul_scalar(phi.g_poly(), beta.x()));
    }
    fiber = exactnum::primitive_positive(fiber);
    return pullback_of_fiber(fiber, phi.degree());
}

Divisor pullback_divisor(const RationalMap& phi, const ProjClass& beta) {
    if (beta.is_infinity()) return pullback_divisor(phi, ProjPoint::infinity());
    const IntPoly& A = beta.cls().minpoly();
    if (A.degree() == 1) {
        return pullback_divisor(phi, ProjPoint(-A[0], A[1]));
    }
    // fiber polynomial over the class: A~(f(z), g(z)) homogenized to deg A
    long m = A.degree();
    IntPoly f = phi.f_poly(), g = phi.g_poly();
    IntPoly acc;
    std::vector<IntPoly> fp(static_cast<size_t>(m) + 1), gp(static_cast<size_t>(m) + 1);
    fp[0] = IntPoly::constant(1);
    gp[0] = IntPoly::constant(1);
    for (long j = 1; j <= m; ++j) {
        fp[static_cast<size_t>(j)] = exactnum::mul(fp[static_cast<size_t>(j - 1)], f);
        gp[static_cast<size_t>(j)] = exactnum::mul(gp[static_cast<size_t>(j - 1)], g);
    }
    for (long j = 0; j <= m; ++j) {
        if (A[static_cast<size_t>(j)] == 0) continue;
        acc = exactnum::add(
            acc, exactnum::mul_scalar(exactnum::mul(fp[static_cast<size_t>(j)],
                                                    gp[static_cast<size_t>(m - j)]),
                                      A[static_cast<size_t>(j)]));
    }
    return pullback_of_fiber(exactnum::primitive_positive(acc), phi.degree() * m);
}

}  // namespace backorb::dynamics
