#include <doctest.h>

#include <random>

#include "backorb/exactnum/resultant.hpp"
#include "backorb/kernels/modpoly.hpp"

using namespace backorb;
using namespace backorb::kernels;

namespace {

ModPoly random_poly(std::mt19937_64& rng, long deg, uint32_t p) {
    std::vector<uint32_t> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<uint32_t>(rng() % p);
    if (c.back() == 0) c.back() = 1;
    return ModPoly(std::move(c), p);
}

}  // namespace

TEST_CASE("mod-p division invariant") {
    std::mt19937_64 rng(11);
    for (uint32_t p : {2u, 3u, 101u, 65537u}) {
        for (int t = 0; t < 100; ++t) {
            auto a = random_poly(rng, 1 + static_cast<long>(rng() % 12), p);
            auto b = random_poly(rng, 1 + static_cast<long>(rng() % 6), p);
            ModPoly q, r;
            mp_divrem(a, b, q, r);
            CHECK(mp_add(mp_mul(q, b), r) == a);
            CHECK((r.is_zero() || r.degree() < b.degree()));
        }
    }
}

TEST_CASE("mod-p factorization roundtrip") {
    std::mt19937_64 rng(20260810);
    for (uint32_t p : {2u, 3u, 5u, 31u, 1009u}) {
        for (int t = 0; t < 60; ++t) {
            auto f = random_poly(rng, 2 + static_cast<long>(rng() % 10), p);
            auto fac = mp_factor(f);
            ModPoly prod({fac.unit}, p);
            for (auto& term : fac.factors) {
                CHECK(term.poly.leading() == 1);
                for (unsigned i = 0; i < term.multiplicity; ++i) prod = mp_mul(prod, term.poly);
            }
            CHECK(prod == f);
            // factors are irreducible: no further splitting of small ones
            for (auto& term : fac.factors) {
                if (term.poly.degree() <= 1) continue;
                auto sub = mp_factor(term.poly);
                CHECK(sub.factors.size() == 1);
                CHECK(sub.factors[0].multiplicity == 1);
            }
        }
    }
}

TEST_CASE("mod-p resultant matches the integer resultant") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 150; ++t) {
        std::vector<Int> ca(2 + rng() % 5), cb(2 + rng() % 5);
        for (auto& x : ca) x = Int(static_cast<long>(rng() % 21) - 10);
        for (auto& x : cb) x = Int(static_cast<long>(rng() % 21) - 10);
        if (ca.back() == 0) ca.back() = 1;
        if (cb.back() == 0) cb.back() = 1;
        IntPoly f(std::move(ca)), g(std::move(cb));
        uint32_t p = 1000003;
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) continue;
        Int want = exactnum::resultant(f, g) % Int(p);
        if (want < 0) want += p;
        uint32_t got = mp_resultant(ModPoly::from_int_poly(f, p), ModPoly::from_int_poly(g, p));
        CHECK(Int(got) == want);
    }
}
