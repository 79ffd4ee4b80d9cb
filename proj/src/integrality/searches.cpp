#include "backorb/integrality/searches.hpp"

#include <algorithm>

#include "backorb/exactnum/cyclotomic.hpp"
#include "backorb/factor/capelli.hpp"
#include "backorb/factor/factorize.hpp"
#include "backorb/heights/mahler.hpp"

namespace backorb::integrality {

using dynamics::ProjPoint;
using dynamics::RationalMap;

std::set<unsigned long> integral_roots_of_unity(const Rat& alpha, const PlaceSet& S,
                                                unsigned long m_max) {
    if (alpha == 0 || alpha == 1 || alpha == -1)
        throw std::invalid_argument("alpha must not be 0 or a root of unity");
    std::set<unsigned long> out;
    Int a(alpha.get_num()), b(alpha.get_den());
    std::vector<Int> strip = {b};
    for (const Int& p : S.finite_primes()) strip.push_back(p);
    for (unsigned long m = 1; m <= m_max; ++m) {
        // primes p with v_p(alpha) >= 0 violate integrality iff
        // p | Phi~_m(a, b); primes dividing b impose no condition (the
        // roots of unity are p-adic units, branch 2 holds)
        Int val = exactnum::eval_homogeneous(exactnum::cyclotomic(m), a, b);
        if (val == 0) continue;  // alpha itself a root of unity: excluded above
        if (exactnum::strip_factors(val, strip) == 1) out.insert(m);
    }
    return out;
}

std::set<long> integral_powers(const Rat& alpha, const ConjugateClass& beta, const PlaceSet& S,
                               long m_lo, long m_hi) {
    if (alpha == 0 || alpha == 1 || alpha == -1)
        throw std::invalid_argument("alpha must not be 0 or +-1");
    if (m_lo > m_hi) throw std::invalid_argument("empty exponent range");
    std::set<long> out;
    for (long m = m_lo; m <= m_hi; ++m) {
        Rat am(1);
        if (m >= 0) {
            for (long i = 0; i < m; ++i) am *= alpha;
        } else {
            for (long i = 0; i < -m; ++i) am /= alpha;
        }
        ProjClass gamma = ProjClass::rational(am);
        ProjClass target(beta);
        if (gamma == target)
            throw std::domain_error("alpha^" + std::to_string(m) +
                                    " coincides with beta: degenerate");
        if (is_S_integral(gamma, target, S).integral) out.insert(m);
    }
    return out;
}

BackwardIntegralResult integral_backward_orbit(const RationalMap& phi, const Rat& beta,
                                               const Rat& alpha, const PlaceSet& S,
                                               unsigned long depth, long degree_cap) {
    BackwardIntegralResult out{};
    out.alpha_preperiodic_warning =
        is_preperiodic(phi, ProjPoint::from_rational(alpha)).preperiodic;
    out.capelli_path_used = phi.is_power_map();
    ProjClass alpha_cls = ProjClass::rational(alpha);

    auto test_class = [&](unsigned long level, const ProjClass& cls) {
        if (cls == alpha_cls) return;  // gamma = alpha: trivially not "integral away from itself"
        if (is_S_integral(cls, alpha_cls, S).integral) out.hits.push_back({level, cls});
    };

    // level 0 is beta itself
    test_class(0, ProjClass::rational(beta));

    for (unsigned long n = 1; n <= depth; ++n) {
        if (out.capelli_path_used) {
            // fiber of z^d is z^(d^n) - beta: the Capelli fast path factors
            // it without the general machinery
            long dn = 1;
            for (unsigned long i = 0; i < n; ++i) {
                if (dn > degree_cap / phi.degree()) throw dynamics::DegreeCapExceeded();
                dn *= phi.degree();
            }
            if (beta == 0) break;  // the only preimage of 0 is 0 itself
            auto [fac, tr] = factor::capelli_factor(static_cast<unsigned long>(dn), beta);
            for (const auto& t : fac.factors)
                test_class(n, ProjClass(ConjugateClass::from_irreducible(t.poly)));
        } else {
            auto fiber = iterate_poly(phi, n, beta, degree_cap);
            auto fac = factor::factor_over_Q(fiber.poly);
            for (const auto& t : fac.factors)
                test_class(n, ProjClass(ConjugateClass::from_irreducible(t.poly)));
            if (fiber.infinity_multiplicity > 0) test_class(n, ProjClass::infinity());
        }
    }
    std::sort(out.hits.begin(), out.hits.end(), [](const auto& a, const auto& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.cls < b.cls;
    });
    return out;
}

ForwardIntegralResult forward_integral_points(const RationalMap& phi, const ProjPoint& beta,
                                              const ProjPoint& alpha, const PlaceSet& S,
                                              unsigned long n_max) {
    ForwardIntegralResult out{};
    out.alpha_exceptional_warning = is_exceptional(phi, alpha);
    ProjClass alpha_cls = alpha.is_infinity()
                              ? ProjClass::infinity()
                              : ProjClass::rational(alpha.to_rational());
    ProjPoint P = beta;
    for (unsigned long n = 0; n <= n_max; ++n) {
        ProjClass gamma = P.is_infinity() ? ProjClass::infinity()
                                          : ProjClass::rational(P.to_rational());
        if (!(gamma == alpha_cls) && is_S_integral(gamma, alpha_cls, S).integral)
            out.hits.emplace_back(n, P);
        if (n < n_max) P = evaluate(phi, P);
    }
    return out;
}

std::vector<std::pair<unsigned long, Rat>> rational_backward_points(const RationalMap& phi,
                                                                    const Rat& beta,
                                                                    unsigned long depth,
                                                                    long degree_cap) {
    std::vector<std::pair<unsigned long, Rat>> out;
    out.emplace_back(0, beta);
    for (unsigned long n = 1; n <= depth; ++n) {
        auto fiber = iterate_poly(phi, n, beta, degree_cap);
        for (const Rat& r : factor::rational_roots(fiber.poly)) out.emplace_back(n, r);
    }
    return out;
}

BirFamilyReport bir_family_check(unsigned long n) {
    // f_n(z) = z^(2^n)(z - 2) - 1 = z^(2^n + 1) - 2 z^(2^n) - 1
    if (n > 20) throw std::invalid_argument("2^n exceeds any sensible degree budget");
    size_t k = 1ull << n;
    std::vector<Int> c(k + 2, Int(0));
    c[0] = -1;
    c[k] = -2;
    c[k + 1] = 1;
    BirFamilyReport rep{};
    rep.n = n;
    rep.poly = IntPoly(std::move(c));
    ProjClass two = ProjClass::rational(Rat(2));
    PlaceSet S;  // just the archimedean place
    rep.integral = is_S_integral_rootset(rep.poly, two, S).integral;
    Int at2 = exactnum::eval(rep.poly, Int(2));
    rep.resultant_shortcut_ok = (at2 == 1 || at2 == -1);
    auto lm = heights::log_mahler_measure(rep.poly);
    rep.class_height = lm.value / static_cast<double>(rep.poly.degree());
    rep.height_error = lm.error_bound / static_cast<double>(rep.poly.degree());
    return rep;
}

}  // namespace backorb::integrality
