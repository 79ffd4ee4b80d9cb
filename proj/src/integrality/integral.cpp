#include "backorb/integrality/integral.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "backorb/exactnum/newton_polygon.hpp"
#include "backorb/exactnum/resultant.hpp"

namespace backorb::integrality {

using dynamics::ProjPoint;
using exactnum::root_valuations;

std::vector<Rat> conjugate_difference_valuations(const ConjugateClass& gamma,
                                                 const ConjugateClass& alpha, const Int& p) {
    if (gamma == alpha) throw std::invalid_argument("classes coincide: differences degenerate");
    IntPoly diff_poly;
    if (alpha.is_rational()) {
        Rat a = alpha.rational_value();
        diff_poly = exactnum::taylor_shift_rat(gamma.minpoly(), Int(a.get_num()), Int(a.get_den()));
    } else {
        diff_poly = exactnum::difference_resultant(gamma.minpoly(), alpha.minpoly());
    }
    return root_valuations(diff_poly, p);
}

namespace {

// negative root valuation exists at p iff p divides the leading coefficient
// of the primitive polynomial (the Newton polygon must climb back up to it)
bool has_nonintegral_root(const IntPoly& A, const Int& p) {
    return mpz_divisible_p(A.leading().get_mpz_t(), p.get_mpz_t());
}

std::vector<Int> prime_factors(const Int& n) {
    std::vector<Int> out;
    for (auto& [p, e] : dynamics::factor_integer(n)) out.push_back(p);
    return out;
}

// Core of the decision, on bare polynomials.  A is the (squarefree,
// primitive) polynomial whose roots form the tested point set gamma; B the
// same for alpha.  Works for reducible A: the verdict then covers every
// class in A's factorization at once.  The difference polynomial is built
// lazily: most verdicts need only the pair resultant.
IntegralityVerdict integral_verdict_polys(const IntPoly& A, const IntPoly& B, const PlaceSet& S,
                                          const std::function<IntPoly()>& diff_provider,
                                          const Int& pair_res) {
    IntegralityVerdict v{true, std::nullopt};
    IntPoly diff_poly;
    auto diffs_at = [&](const Int& p) {
        if (diff_poly.is_zero()) diff_poly = diff_provider();
        return root_valuations(diff_poly, p);
    };

    // candidate primes of type (a): leading coefficients
    std::vector<Int> lc_primes = prime_factors(A.leading() * B.leading());
    for (const Int& p : lc_primes) {
        if (S.contains(p)) continue;
        bool alpha_nonintegral = has_nonintegral_root(B, p);
        if (alpha_nonintegral && has_nonintegral_root(A, p)) {
            // branch 2 fails: some conjugate of gamma is non-integral at a
            // prime where some conjugate of alpha already is
            auto vals = root_valuations(A, p);
            v.integral = false;
            v.witness = IntegralityWitness{p, "nonintegral-conjugate", vals.front()};
            return v;
        }
        auto diffs = diffs_at(p);
        if (!diffs.empty() && diffs.back() > 0) {
            v.integral = false;
            v.witness = IntegralityWitness{p, "difference", diffs.back()};
            return v;
        }
    }

    // type (b): all conjugates integral at p, so a violation forces
    // v_p(Res) > 0; strip S and the lc primes from the pair resultant
    std::vector<Int> strip = {A.leading() * B.leading()};
    for (const Int& p : S.finite_primes()) strip.push_back(p);
    Int rest = exactnum::strip_factors(pair_res, strip);
    if (rest > 1) {
        auto probe = exactnum::probe_prime_factor(rest);
        v.integral = false;
        Rat slope(0);
        // the slope is audit detail; skip the O(deg^2) shift on big classes
        if (probe.prime && A.degree() <= 128) {
            auto diffs = diffs_at(probe.divisor);
            if (!diffs.empty()) slope = diffs.back();
        }
        v.witness = IntegralityWitness{probe.divisor, "difference", slope, probe.prime};
        return v;
    }
    return v;
}

}  // namespace

IntegralityVerdict is_S_integral(const ProjClass& gamma, const ProjClass& alpha,
                                 const PlaceSet& S) {
    if (gamma == alpha) throw std::invalid_argument("gamma equals alpha: integrality degenerate");

    // cases involving infinity reduce to one-sided integrality
    if (alpha.is_infinity() || gamma.is_infinity()) {
        const ProjClass& finite = alpha.is_infinity() ? gamma : alpha;
        const IntPoly& A = finite.cls().minpoly();
        std::vector<Int> strip;
        for (const Int& p : S.finite_primes()) strip.push_back(p);
        Int rest = exactnum::strip_factors(A.leading(), strip);
        if (rest > 1) {
            auto probe = exactnum::probe_prime_factor(rest);
            Rat slope(0);
            if (probe.prime) slope = root_valuations(A, probe.divisor).front();
            return {false,
                    IntegralityWitness{probe.divisor, "nonintegral-conjugate", slope, probe.prime}};
        }
        return {true, std::nullopt};
    }

    const IntPoly& A = gamma.cls().minpoly();
    const IntPoly& B = alpha.cls().minpoly();
    auto diff_provider = [&]() {
        if (alpha.cls().is_rational()) {
            Rat a = alpha.cls().rational_value();
            return exactnum::taylor_shift_rat(A, Int(a.get_num()), Int(a.get_den()));
        }
        return exactnum::difference_resultant(A, B);
    };
    Int pair_res = exactnum::resultant(A, B);
    return integral_verdict_polys(A, B, S, diff_provider, pair_res);
}

IntegralityVerdict is_S_integral_rootset(const IntPoly& A_in, const ProjClass& alpha,
                                         const PlaceSet& S) {
    IntPoly A = exactnum::primitive_positive(A_in);
    if (A.degree() < 1) throw std::invalid_argument("root set must have degree >= 1");
    if (alpha.is_infinity()) {
        std::vector<Int> strip;
        for (const Int& p : S.finite_primes()) strip.push_back(p);
        Int rest = exactnum::strip_factors(A.leading(), strip);
        if (rest > 1) {
            auto probe = exactnum::probe_prime_factor(rest);
            Rat slope(0);
            if (probe.prime) slope = root_valuations(A, probe.divisor).front();
            return {false,
                    IntegralityWitness{probe.divisor, "nonintegral-conjugate", slope, probe.prime}};
        }
        return {true, std::nullopt};
    }
    const IntPoly& B = alpha.cls().minpoly();
    auto diff_provider = [&]() {
        if (alpha.cls().is_rational()) {
            Rat a = alpha.cls().rational_value();
            return exactnum::taylor_shift_rat(A, Int(a.get_num()), Int(a.get_den()));
        }
        return exactnum::difference_resultant(A, B);
    };
    Int pair_res = exactnum::resultant(A, B);
    if (pair_res == 0)
        throw std::invalid_argument("root set meets alpha: integrality degenerate");
    return integral_verdict_polys(A, B, S, diff_provider, pair_res);
}

IntegralityVerdict is_S_integral_divisor(const ProjClass& gamma, const dynamics::Divisor& delta,
                                         const PlaceSet& S) {
    if (!delta.effective())
        throw std::invalid_argument("divisor integrality is defined for effective divisors only");
    for (const auto& term : delta.terms()) {
        if (term.mult == 0) continue;
        auto v = is_S_integral(gamma, term.cls, S);
        if (!v.integral) return v;
    }
    return {true, std::nullopt};
}

long class_local_height_valuation(const ProjClass& cls, const ProjPoint& Q, const Int& p) {
    if (cls.is_infinity()) {
        if (Q.is_infinity()) throw std::domain_error("local height infinite on the diagonal");
        return exactnum::valuation(Q.y(), p);
    }
    const IntPoly& A = cls.cls().minpoly();
    Int val = exactnum::eval_homogeneous(A, Q.x(), Q.y());
    if (val == 0) throw std::domain_error("Q lies in the class: local height infinite");
    return exactnum::valuation(val, p);
}

long projection_lhs_valuation(const dynamics::RationalMap& phi, const ProjPoint& P,
                              const ProjPoint& Q, const Int& p) {
    ProjPoint img = evaluate(phi, Q);
    if (img == P) throw std::invalid_argument("phi(Q) = P: local height infinite");
    Int cross = P.x() * img.y() - P.y() * img.x();
    return exactnum::valuation(cross, p);
}

long projection_rhs_valuation(const dynamics::RationalMap& phi, const ProjPoint& P,
                              const ProjPoint& Q, const Int& p) {
    auto div = pullback_divisor(phi, P);
    long total = 0;
    for (const auto& term : div.terms())
        total += term.mult * class_local_height_valuation(term.cls, Q, p);
    return total;
}

bool check_projection_formula(const dynamics::RationalMap& phi, const ProjPoint& P,
                              const ProjPoint& Q, const Int& p) {
    auto bad = bad_reduction_primes(phi);
    if (bad.count(p))
        throw std::invalid_argument("projection formula needs good reduction; bad prime " +
                                    p.get_str());
    return projection_lhs_valuation(phi, P, Q, p) == projection_rhs_valuation(phi, P, Q, p);
}

}  // namespace backorb::integrality
