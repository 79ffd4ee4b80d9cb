#include <doctest.h>

#include <random>

#include "backorb/dynamics/chebyshev.hpp"
#include "backorb/dynamics/divisor.hpp"
#include "backorb/dynamics/orbit.hpp"

using namespace backorb;
using namespace backorb::dynamics;

namespace {

RationalMap map_z2() { return RationalMap::power_map(2); }
RationalMap map_z2m1() {
    return RationalMap::from_fraction(IntPoly({-1, 0, 1}), IntPoly::constant(1));
}

Rat random_rat(std::mt19937_64& rng, long bound) {
    long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    long den = 1 + static_cast<long>(rng() % bound);
    return exactnum::make_rat(Int(num), Int(den));
}

}  // namespace

TEST_CASE("evaluation in normalized coordinates") {
    CHECK(evaluate(map_z2(), ProjPoint(Int(3), Int(2))) == ProjPoint(Int(9), Int(4)));
    CHECK(evaluate(map_z2(), ProjPoint(Int(0), Int(1))) == ProjPoint(Int(0), Int(1)));
    auto phi = RationalMap::from_fraction(IntPoly({1, 0, 1}), IntPoly({0, 1}));
    CHECK(evaluate(phi, ProjPoint(Int(2), Int(1))) == ProjPoint(Int(5), Int(2)));
}

TEST_CASE("iterate polynomial examples") {
    auto f = iterate_poly(map_z2(), 2, Rat(2), 4096);
    CHECK(f.poly == IntPoly({-2, 0, 0, 0, 1}));
    CHECK(f.infinity_multiplicity == 0);
    auto g = iterate_poly(map_z2m1(), 2, Rat(0), 4096);
    CHECK(g.poly == IntPoly({0, 0, -2, 0, 1}));
    auto h = iterate_poly(map_z2(), 1, exactnum::make_rat(Int(1), Int(4)), 4096);
    CHECK(h.poly == IntPoly({-1, 0, 4}));
    CHECK_THROWS_AS(iterate_poly(map_z2(), 13, Rat(2), 4096), DegreeCapExceeded);
}

TEST_CASE("iterate pair agrees with pointwise evaluation") {
    std::mt19937_64 rng(20260810);
    std::vector<RationalMap> maps{map_z2(), map_z2m1(),
                                  RationalMap::from_fraction(IntPoly({1, 0, 1}), IntPoly({0, 1})),
                                  RationalMap::from_fraction(IntPoly({-3, 3, 1}), IntPoly::constant(1))};
    for (const auto& phi : maps) {
        for (unsigned long n = 1; n <= 6; ++n) {
            auto [fn, gn, level, formal] = iterate_pair(phi, n, 1 << 13);
            for (int t = 0; t < 8; ++t) {
                Rat x = random_rat(rng, 7);
                ProjPoint P = ProjPoint::from_rational(x);
                ProjPoint img = evaluate_iterate(phi, n, P);
                Int fx = exactnum::eval_homogeneous(fn, Int(x.get_num()), Int(x.get_den()));
                Int gx = exactnum::eval_homogeneous(gn, Int(x.get_num()), Int(x.get_den()));
                if (fx == 0 && gx == 0) continue;  // content cancelled at this x
                CHECK(ProjPoint(fx, gx) == img);
            }
        }
    }
}

TEST_CASE("bad reduction primes") {
    CHECK(bad_reduction_primes(map_z2()).empty());
    // [X^2 : 5 Y^2]
    auto scaled = RationalMap(std::vector<Int>{Int(0), Int(0), Int(1)},
                              std::vector<Int>{Int(5), Int(0), Int(0)});
    CHECK(bad_reduction_primes(scaled) == std::set<Int>{Int(5)});
    // [X^2+Y^2 : 2XY]: resultant 4, degree drops mod 2
    auto phi = RationalMap::from_fraction(IntPoly({1, 0, 1}), IntPoly({0, 2}));
    CHECK(bad_reduction_primes(phi) == std::set<Int>{Int(2)});
}

TEST_CASE("pullback divisors") {
    auto d1 = pullback_divisor(map_z2(), ProjPoint(Int(1), Int(1)));
    CHECK(d1.degree() == 2);
    CHECK(d1.terms().size() == 2);
    auto d2 = pullback_divisor(map_z2(), ProjPoint(Int(0), Int(1)));
    REQUIRE(d2.terms().size() == 1);
    CHECK(d2.terms()[0].mult == 2);
    auto d3 = pullback_divisor(map_z2(), ProjPoint(Int(2), Int(1)));
    REQUIRE(d3.terms().size() == 1);
    CHECK(d3.terms()[0].cls.cls().minpoly() == IntPoly({-2, 0, 1}));
    CHECK(d3.effective());
}

TEST_CASE("divisor degree conservation") {
    std::mt19937_64 rng(20260810);
    std::vector<RationalMap> maps{map_z2(), map_z2m1(),
                                  RationalMap::from_fraction(IntPoly({1, 0, 1}), IntPoly({0, 1})),
                                  RationalMap::from_fraction(IntPoly({2, 0, 0, 1}), IntPoly({1, 1}))};
    for (const auto& phi : maps) {
        for (int t = 0; t < 50; ++t) {
            ProjPoint beta = ProjPoint::from_rational(random_rat(rng, 9));
            auto div = pullback_divisor(phi, beta);
            CHECK(div.degree() == phi.degree());
            CHECK(div.effective());
        }
        CHECK(pullback_divisor(phi, ProjPoint::infinity()).degree() == phi.degree());
    }
}

TEST_CASE("preperiodicity decisions") {
    auto r1 = is_preperiodic(map_z2(), ProjPoint(Int(1), Int(1)));
    CHECK(r1.preperiodic);
    auto r2 = is_preperiodic(map_z2m1(), ProjPoint(Int(0), Int(1)));
    CHECK(r2.preperiodic);
    CHECK(r2.cycle.size() == 2);  // 0 -> -1 -> 0
    auto r3 = is_preperiodic(map_z2(), ProjPoint(Int(2), Int(1)));
    CHECK(!r3.preperiodic);
    CHECK(r3.escape_height > r3.escape_threshold);
}

TEST_CASE("exceptional points") {
    CHECK(is_exceptional(map_z2(), ProjPoint(Int(0), Int(1))));
    CHECK(is_exceptional(map_z2(), ProjPoint::infinity()));
    CHECK(!is_exceptional(map_z2(), ProjPoint(Int(1), Int(1))));
    CHECK(!is_exceptional(map_z2m1(), ProjPoint(Int(0), Int(1))));
}

TEST_CASE("exceptional implies preperiodic") {
    std::vector<RationalMap> maps{map_z2(), map_z2m1(),
                                  RationalMap::from_fraction(IntPoly({1, 0, 1}), IntPoly({0, 1}))};
    for (const auto& phi : maps) {
        for (long x = -4; x <= 4; ++x) {
            ProjPoint P(Int(x), Int(1));
            if (is_exceptional(phi, P)) CHECK(is_preperiodic(phi, P).preperiodic);
        }
        if (is_exceptional(phi, ProjPoint::infinity()))
            CHECK(is_preperiodic(phi, ProjPoint::infinity()).preperiodic);
    }
}

TEST_CASE("chebyshev table and laws") {
    CHECK(chebyshev(2) == IntPoly({-2, 0, 1}));
    CHECK(chebyshev(3) == IntPoly({0, -3, 0, 1}));
    CHECK(chebyshev(4) == IntPoly({2, 0, -4, 0, 1}));
    CHECK(chebyshev(5) == IntPoly({0, 5, 0, -5, 0, 1}));

    // semigroup law T_de = T_d o T_e, coefficient-exact
    for (long d = 2; d <= 5; ++d)
        for (long e = 2; e <= 5; ++e)
            CHECK(chebyshev(d * e) == exactnum::compose(chebyshev(d), chebyshev(e)));

    // commuting square with pi(w) = w + 1/w at random rationals:
    // T_d(w + 1/w) == w^d + w^{ -d }
    std::mt19937_64 rng(20260810);
    for (int t = 0; t < 20; ++t) {
        Rat w = random_rat(rng, 9);
        if (w == 0) w = Rat(2);
        for (long d = 2; d <= 5; ++d) {
            Rat lhs = exactnum::eval(chebyshev(d), Rat(w + 1 / w));
            Rat wd(1);
            for (long i = 0; i < d; ++i) wd *= w;
            CHECK(lhs == wd + 1 / wd);
        }
    }
}
