#include <doctest.h>

#include <cmath>
#include <random>

#include "backorb/heights/mahler.hpp"

using namespace backorb;
using namespace backorb::dynamics;
using namespace backorb::heights;
using integrality::ConjugateClass;

namespace {

RationalMap map_z2() { return RationalMap::power_map(2); }
RationalMap map_z2m1() {
    return RationalMap::from_fraction(IntPoly({-1, 0, 1}), IntPoly::constant(1));
}
RationalMap map_jones() {
    return RationalMap::from_fraction(IntPoly({-3, 3, 1}), IntPoly::constant(1));
}

}  // namespace

TEST_CASE("point heights") {
    CHECK(height_point(ProjPoint(Int(2), Int(3))).value == doctest::Approx(std::log(3)));
    CHECK(height_point(ProjPoint(Int(0), Int(1))).value == 0.0);
    CHECK(height_point(ProjPoint(Int(7), Int(1))).value == doctest::Approx(std::log(7)));
    CHECK(height_point(ProjPoint(Int(2), Int(3))).error_bound == 0.0);
}

TEST_CASE("commute bound soundness by exhaustive search") {
    // |h(phi P) - d h(P)| <= C over every coprime pair of height <= log 150
    for (const auto& phi : {map_z2m1(), map_jones()}) {
        double C = height_commute_bound(phi);
        for (long x = -150; x <= 150; ++x) {
            for (long y = 0; y <= 150; ++y) {
                if (y == 0 && x != 1) continue;
                if (x == 0 && y != 1) continue;
                if (gcd(Int(x), Int(y)) != 1) continue;
                ProjPoint P(Int(x), Int(y));
                double h = height_point(P).value;
                double hi = height_point(evaluate(phi, P)).value;
                CHECK(std::fabs(hi - phi.degree() * h) <= C + 1e-9);
            }
        }
    }
    CHECK(height_commute_bound(map_z2()) == 0.0);
    CHECK(height_commute_bound(map_z2m1()) <= std::log(8.0));
}

TEST_CASE("canonical height of the power map is the height") {
    std::mt19937_64 rng(20260810);
    for (int t = 0; t < 100; ++t) {
        long num = static_cast<long>(rng() % 199) - 99;
        long den = 1 + static_cast<long>(rng() % 99);
        ProjPoint P = ProjPoint::from_rational(exactnum::make_rat(Int(num), Int(den)));
        auto hhat = canonical_height(map_z2(), P, 1e-9);
        auto h = height_point(P);
        CHECK(hhat.value == h.value);  // bit-identical: n = 0 and C = 0
        CHECK(hhat.error_bound == 0.0);
    }
}

TEST_CASE("canonical height functional equation") {
    std::mt19937_64 rng(77);
    std::vector<RationalMap> maps{map_z2m1(), map_jones(),
                                  RationalMap::from_fraction(IntPoly({2, 0, 0, 1}), IntPoly::constant(1))};
    int done = 0;
    for (const auto& phi : maps) {
        for (int t = 0; t < 7; ++t) {
            long num = static_cast<long>(rng() % 9) - 4;
            long den = 1 + static_cast<long>(rng() % 3);
            ProjPoint P = ProjPoint::from_rational(exactnum::make_rat(Int(num), Int(den)));
            auto h1 = canonical_height(phi, P, 1e-7);
            auto h2 = canonical_height(phi, evaluate(phi, P), 1e-7);
            CHECK(std::fabs(h2.value - phi.degree() * h1.value) <=
                  phi.degree() * h1.error_bound + h2.error_bound + 1e-12);
            ++done;
        }
    }
    CHECK(done >= 20);
}

TEST_CASE("preperiodic points have vanishing canonical height") {
    auto zero = ProjPoint(Int(0), Int(1));
    REQUIRE(is_preperiodic(map_z2m1(), zero).preperiodic);
    auto h = canonical_height(map_z2m1(), zero, 1e-9);
    CHECK(std::fabs(h.value) <= h.error_bound);
}

TEST_CASE("class heights") {
    // degree-1 classes route through the exact point height
    auto five = ConjugateClass::from_rational(Rat(5));
    CHECK(height_class(five).value == doctest::Approx(std::log(5)));
    CHECK(height_class(five).error_bound == 0.0);

    // Mahler measure of z^2 - 2 is 2 by hand: h = (1/2) log 2
    auto sqrt2 = ConjugateClass::from_minpoly(IntPoly({-2, 0, 1}));
    auto h2 = height_class(sqrt2, 1e-10);
    CHECK(h2.value == doctest::Approx(0.5 * std::log(2)).epsilon(1e-9));
    CHECK(h2.error_bound <= 1e-10);

    // golden ratio class: h = (1/2) log((1+sqrt5)/2) = 0.2406059...
    auto golden = ConjugateClass::from_minpoly(IntPoly({-1, -1, 1}));
    CHECK(height_class(golden, 1e-10).value == doctest::Approx(0.24060591252662).epsilon(1e-9));
}

TEST_CASE("monotone refinement of canonical heights") {
    auto phi = map_z2m1();
    ProjPoint P(Int(2), Int(1));
    double prev_err = 1e9;
    double prev_val = 0;
    bool first = true;
    for (double tol : {1e-2, 1e-4, 1e-6, 1e-8}) {
        auto h = canonical_height(phi, P, tol);
        if (!first) CHECK(std::fabs(h.value - prev_val) <= prev_err + h.error_bound);
        prev_val = h.value;
        prev_err = h.error_bound;
        first = false;
        CHECK(h.error_bound <= tol);
    }
}

TEST_CASE("lehmer ratio") {
    auto sqrt2 = ConjugateClass::from_minpoly(IntPoly({-2, 0, 1}));
    CHECK(lehmer_ratio(sqrt2, map_z2()) == doctest::Approx(std::log(2)).epsilon(1e-9));
    auto two = ConjugateClass::from_rational(Rat(2));
    CHECK(lehmer_ratio(two, map_z2()) == doctest::Approx(std::log(2)));
    // Lehmer's degree-10 polynomial: ratio = log(1.17628...) = 0.1623576...
    auto lehmer = ConjugateClass::from_minpoly(
        IntPoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}));
    CHECK(lehmer_ratio(lehmer, map_z2(), 1e-9) ==
          doctest::Approx(0.162357612007738).epsilon(1e-8));
    // the canonical height under non-power maps is out of scope
    CHECK_THROWS_AS(lehmer_ratio(sqrt2, map_z2m1()), std::invalid_argument);
}

TEST_CASE("mahler measure sanity") {
    // M((z^2-2)(z-3)) = 2 * 3
    IntPoly f = exactnum::mul(IntPoly({-2, 0, 1}), IntPoly({-3, 1}));
    auto lm = log_mahler_measure(f);
    CHECK(lm.value == doctest::Approx(std::log(6)).epsilon(1e-9));
    // cyclotomic polynomials have Mahler measure 1
    auto lc = log_mahler_measure(IntPoly({1, 1, 1}));
    CHECK(std::fabs(lc.value) <= 1e-9);
}
