#include <doctest.h>

#include <random>

#include "backorb/factor/factorize.hpp"
#include "backorb/kernels/modpoly.hpp"

using namespace backorb;
using namespace backorb::factor;
using exactnum::mul;

namespace {

// independent oracle: Eisenstein's criterion at p certifies irreducibility
bool eisenstein_at(const IntPoly& f, const Int& p) {
    if (f.degree() < 1) return false;
    if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) return false;
    for (long i = 0; i < f.degree(); ++i)
        if (!mpz_divisible_p(f[static_cast<size_t>(i)].get_mpz_t(), p.get_mpz_t())) return false;
    return !mpz_divisible_p(f[0].get_mpz_t(), Int(p * p).get_mpz_t());
}

IntPoly random_poly(std::mt19937_64& rng, long deg, long coeff_bound) {
    std::vector<Int> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = Int(static_cast<long>(rng() % (2 * coeff_bound + 1)) - coeff_bound);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("factorization worked examples") {
    // z^4 - 16: expand the product back and compare coefficient-wise
    auto f1 = factor_over_Q(IntPoly({-16, 0, 0, 0, 1}));
    CHECK(f1.factors.size() == 3);
    CHECK(f1.expand() == IntPoly({-16, 0, 0, 0, 1}));
    CHECK(f1.factors[0].poly == IntPoly({-2, 1}));
    CHECK(f1.factors[1].poly == IntPoly({2, 1}));
    CHECK(f1.factors[2].poly == IntPoly({4, 0, 1}));

    auto f2 = factor_over_Q(IntPoly({-1, 0, 1}));
    CHECK(f2.factors.size() == 2);

    // z^4 - 4z^2 + 2 is Eisenstein at 2 (independent oracle), so one factor
    IntPoly eis({2, 0, -4, 0, 1});
    REQUIRE(eisenstein_at(eis, Int(2)));
    auto f3 = factor_over_Q(eis);
    CHECK(f3.factors.size() == 1);
    CHECK(f3.factors[0].multiplicity == 1);

    // z^4 + 4 via the expansion oracle
    auto f4 = factor_over_Q(IntPoly({4, 0, 0, 0, 1}));
    REQUIRE(f4.factors.size() == 2);
    CHECK(mul(f4.factors[0].poly, f4.factors[1].poly) == IntPoly({4, 0, 0, 0, 1}));
    CHECK(f4.factors[0].poly == IntPoly({2, -2, 1}));
    CHECK(f4.factors[1].poly == IntPoly({2, 2, 1}));
}

TEST_CASE("factorization roundtrip property") {
    std::mt19937_64 rng(20260810);
    for (int t = 0; t < 120; ++t) {
        IntPoly f = random_poly(rng, 1 + static_cast<long>(rng() % 8), 12);
        if (rng() % 3 == 0) f = mul(f, random_poly(rng, 1 + static_cast<long>(rng() % 3), 6));
        if (rng() % 4 == 0) f = mul(f, f);  // force multiplicities
        if (f.is_zero()) continue;
        auto fac = factor_over_Q(f);
        CHECK(fac.expand() == f);
        for (size_t i = 0; i < fac.factors.size(); ++i) {
            CHECK(fac.factors[i].poly.leading() > 0);
            CHECK(exactnum::content(fac.factors[i].poly) == 1);
            for (size_t j = i + 1; j < fac.factors.size(); ++j)
                CHECK(!(fac.factors[i].poly == fac.factors[j].poly));
        }
    }
}

TEST_CASE("mod-p degree patterns refine the rational factorization") {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 40; ++t) {
        IntPoly f = mul(random_poly(rng, 2 + static_cast<long>(rng() % 4), 9),
                        random_poly(rng, 1 + static_cast<long>(rng() % 4), 9));
        auto fac = factor_over_Q(f);
        int checked = 0;
        Int pz(13);
        while (checked < 3 && pz < 5000) {
            mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
            uint32_t p = static_cast<uint32_t>(pz.get_ui());
            if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
            auto fp = kernels::ModPoly::from_int_poly(f, p);
            if (kernels::mp_gcd(fp, kernels::mp_derivative(fp)).degree() != 0) continue;
            // multiset of mod-p degrees of f equals the union over the
            // rational factors of their own mod-p degree multisets
            auto collect = [&](const IntPoly& g, unsigned mult) {
                std::vector<long> degs;
                auto gf = kernels::mp_factor(kernels::ModPoly::from_int_poly(g, p));
                for (auto& term : gf.factors)
                    for (unsigned i = 0; i < term.multiplicity * mult; ++i)
                        degs.push_back(term.poly.degree());
                return degs;
            };
            std::vector<long> whole = collect(f, 1), parts;
            for (auto& term : fac.factors) {
                auto d = collect(term.poly, term.multiplicity);
                parts.insert(parts.end(), d.begin(), d.end());
            }
            std::sort(whole.begin(), whole.end());
            std::sort(parts.begin(), parts.end());
            CHECK(whole == parts);
            ++checked;
        }
    }
}

TEST_CASE("non-monic and content handling") {
    // (2z-1)(3z+5) with an extra content of 6
    IntPoly f = exactnum::mul_scalar(mul(IntPoly({-1, 2}), IntPoly({5, 3})), Int(6));
    auto fac = factor_over_Q(f);
    CHECK(fac.unit == 6);
    CHECK(fac.factors.size() == 2);
    CHECK(fac.expand() == f);
}

TEST_CASE("rational roots by lifting") {
    // roots 3/2, -5, 0 and a quadratic without rational roots
    IntPoly f = mul(mul(IntPoly({-3, 2}), IntPoly({5, 1})),
                    mul(IntPoly({0, 1}), IntPoly({1, 1, 1})));
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == -5);
    CHECK(roots[1] == 0);
    CHECK(roots[2] == exactnum::make_rat(Int(3), Int(2)));

    // cross-check against linear factors of the factorizer on random input
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        IntPoly g = mul(IntPoly({Int(static_cast<long>(rng() % 9) - 4), Int(1 + rng() % 4)}),
                        random_poly(rng, 1 + static_cast<long>(rng() % 4), 8));
        auto r = rational_roots(g);
        auto fac = factor_over_Q(g);
        std::vector<Rat> linear;
        for (auto& term : fac.factors)
            if (term.poly.degree() == 1)
                linear.push_back(exactnum::make_rat(-term.poly[0], term.poly[1]));
        std::sort(linear.begin(), linear.end());
        CHECK(r == linear);
    }
}
