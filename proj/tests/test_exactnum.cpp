#include <doctest.h>

#include <random>

#include "backorb/exactnum/cyclotomic.hpp"
#include "backorb/exactnum/newton_polygon.hpp"
#include "backorb/exactnum/resultant.hpp"
#include "backorb/exactnum/serialize.hpp"

using namespace backorb;
using namespace backorb::exactnum;

TEST_CASE("valuation over Q") {
    CHECK(valuation(Rat(12), Int(2)) == 2);
    CHECK(valuation(make_rat(Int(3), Int(8)), Int(2)) == -3);
    CHECK(valuation(make_rat(Int(5), Int(7)), Int(3)) == 0);
    CHECK_THROWS_AS(valuation(Rat(0), Int(2)), ValuationOfZero);
}

TEST_CASE("power decomposition and roots") {
    auto d = max_power_decomposition(Rat(64));
    CHECK(d.exponent == 6);
    CHECK(d.base == 2);
    auto d2 = max_power_decomposition(Rat(-64));
    CHECK(d2.exponent == 3);
    CHECK(d2.base == -4);
    CHECK(*rat_nth_root(Rat(16), 2) == 4);
    CHECK(*rat_nth_root(Rat(-8), 3) == -2);
    CHECK(!rat_nth_root(Rat(2), 5).has_value());
}

TEST_CASE("resultant examples") {
    // brute-force oracle for z^2-2 vs z^2+2: product of root differences
    // (+-sqrt2 vs +-i sqrt2) evaluates to 16
    IntPoly f({-2, 0, 1}), g({2, 0, 1});
    CHECK(resultant(f, g) == 16);
    CHECK(resultant_prs(f, g) == 16);
    // degree-1: Res(z-a, z-b) = a-b
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            CHECK(resultant(IntPoly({Int(-a), Int(1)}), IntPoly({Int(-b), Int(1)})) == a - b);
    // forms [X^2 : pY^2]: Sylvester determinant p^2
    for (long p : {2L, 5L, 11L}) {
        std::vector<Int> F{Int(0), Int(0), Int(1)};
        std::vector<Int> G{Int(p), Int(0), Int(0)};
        CHECK(resultant_forms(F, G, 2) == Int(p) * Int(p));
    }
}

TEST_CASE("resultant antisymmetry and route agreement") {
    std::mt19937_64 rng(20260810);
    auto rnd = [&](long deg) {
        std::vector<Int> c(static_cast<size_t>(deg) + 1);
        for (auto& x : c) x = Int(static_cast<long>(rng() % 19) - 9);
        if (c.back() == 0) c.back() = 1;
        return IntPoly(std::move(c));
    };
    for (int t = 0; t < 300; ++t) {
        IntPoly f = rnd(1 + static_cast<long>(rng() % 6));
        IntPoly g = rnd(1 + static_cast<long>(rng() % 6));
        Int rfg = resultant(f, g);
        Int rgf = resultant(g, f);
        Int expect = ((f.degree() * g.degree()) % 2 == 1) ? Int(-rgf) : rgf;
        CHECK(rfg == expect);
        CHECK(rfg == resultant_prs(f, g));
    }
}

TEST_CASE("difference resultant roots") {
    // roots of A: 1, 2; roots of B: 5 -> differences {-4, -3}
    IntPoly A({2, -3, 1}), B({-5, 1});
    IntPoly R = difference_resultant(A, B);
    CHECK(R.degree() == 2);
    CHECK(eval(R, Int(-4)) == 0);
    CHECK(eval(R, Int(-3)) == 0);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly({-1, 1}));
    // derived by dividing z^6-1 by Phi_1 Phi_2 Phi_3
    CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
    // same division oracle for m = 8
    CHECK(cyclotomic(8) == IntPoly({1, 0, 0, 0, 1}));
}

TEST_CASE("cyclotomic product identity up to 200") {
    for (unsigned long n = 1; n <= 200; ++n) {
        IntPoly prod = IntPoly::constant(1);
        for (unsigned long d : divisors(n)) prod = mul(prod, cyclotomic(d));
        std::vector<Int> c(n + 1, Int(0));
        c[0] = -1;
        c[n] = 1;
        CHECK(prod == IntPoly(std::move(c)));
    }
}

TEST_CASE("content and primitive part") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<Int> c(1 + rng() % 8);
        for (auto& x : c) x = Int(static_cast<long>(rng() % 41) - 20);
        IntPoly f(std::move(c));
        if (f.is_zero()) continue;
        CHECK(content(primitive_part(f)) == 1);
        CHECK(mul_scalar(primitive_part(f), content(f)) == f);
    }
}

// ---- Newton polygon against a splitting-field oracle ----
//
// Instances are built as products of integer linear factors (q z - p) and
// monic quadratics z^2 - 2az + (a^2 - b^2 D) with known roots a + b sqrt(D),
// so the root valuations can be computed independently: conjugate pairs
// share v = v_p(norm)/2 when sqrt(D) is not p-adic, and otherwise each root
// is evaluated by lifting sqrt(D) with Newton's iteration.

namespace {

bool sqrt_exists_padic(const Int& u, const Int& p) {
    // u a p-adic unit
    if (p == 2) {
        Int m = u % 8;
        if (m < 0) m += 8;
        return m == 1;
    }
    Int e = (p - 1) / 2, r;
    mpz_powm(r.get_mpz_t(), u.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r == 1;
}

Int hensel_sqrt(const Int& u, const Int& p, const Int& modulus) {
    // find x with x^2 = u mod `modulus` (a power of p); p odd starts from a
    // Tonelli-free brute root mod p, p = 2 starts from 1 mod 8
    Int x(0);
    if (p == 2) {
        x = 1;
        Int m(8);
        while (m < modulus) {
            // x' = x + t*m/2 with (x^2 - u)/m even choice; simple search over
            // the two lifts keeps this tiny
            Int next = m * 2;
            for (Int t(0); t < 2; ++t) {
                Int cand = x + t * (m / 2);
                if (((cand * cand - u) % next) == 0) {
                    x = cand;
                    break;
                }
            }
            m = next;
        }
        return x % modulus;
    }
    for (Int c(0); c < p; ++c)
        if ((c * c - u) % p == 0) {
            x = c;
            break;
        }
    Int m = p;
    while (m < modulus) {
        Int m2 = m * m;
        Int f = (x * x - u) % m2;
        Int dinv;
        Int two_x = (2 * x) % m2;
        if (mpz_invert(dinv.get_mpz_t(), two_x.get_mpz_t(), m2.get_mpz_t()) == 0) break;
        x = (x - f * dinv) % m2;
        if (x < 0) x += m2;
        m = m2;
    }
    return x % modulus;
}

// valuations of a + b sqrt(D) and a - b sqrt(D), D integer non-square
std::vector<Rat> quad_root_valuations(const Int& a, const Int& b, const Int& D, const Int& p) {
    long vD = valuation(D, p);
    Int u = D;
    for (long i = 0; i < vD; ++i) u /= p;
    Int norm = a * a - b * b * D;
    if (vD % 2 == 1 || !sqrt_exists_padic(u, p)) {
        Rat v = make_rat(Int(valuation(norm, p)), Int(2));
        return {v, v};
    }
    // sqrt(D) = p^(vD/2) sqrt(u) in Q_p: evaluate both signs by lifting
    std::vector<Rat> out;
    for (int sign : {1, -1}) {
        Int modulus = p;
        long val = -1;
        for (int rounds = 0; rounds < 12; ++rounds) {
            Int target;
            mpz_pow_ui(target.get_mpz_t(), p.get_mpz_t(), 64u << rounds);
            Int su = hensel_sqrt(u, p, target);
            Int hp;
            mpz_pow_ui(hp.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(vD / 2));
            Int x = (a + Int(sign) * b * hp * su) % target;
            if (x < 0) x += target;
            if (x == 0) continue;  // need more precision
            long v = valuation(x, p);
            if (v + 4 < static_cast<long>(64u << rounds)) {
                val = v;
                break;
            }
        }
        REQUIRE(val >= 0);
        out.push_back(Rat(val));
        (void)modulus;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("newton polygon worked examples") {
    // v(+-sqrt2) = 1/2 at p = 2
    auto np = newton_polygon(IntPoly({-2, 0, 1}), Int(2));
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].valuation == make_rat(Int(1), Int(2)));
    CHECK(np.segments[0].multiplicity == 2);
    // roots 1 +- sqrt2 are 2-adic units: both valuations 0
    auto vals = root_valuations(IntPoly({-1, -2, 1}), Int(2));
    REQUIRE(vals.size() == 2);
    CHECK(vals[0] == 0);
    CHECK(vals[1] == 0);
    // the linear case z - 2 at p = 2
    auto np2 = newton_polygon(IntPoly({-2, 1}), Int(2));
    REQUIRE(np2.segments.size() == 1);
    CHECK(np2.segments[0].valuation == 1);
    // Eisenstein cubic: all three roots at v = 1/3
    auto vals3 = root_valuations(IntPoly({2, -4, 0, 1}), Int(2));
    REQUIRE(vals3.size() == 3);
    for (auto& v : vals3) CHECK(v == make_rat(Int(1), Int(3)));
    // vanishing order reported separately
    auto np3 = newton_polygon(IntPoly({0, 0, 12, 0, 1}), Int(2));
    CHECK(np3.vanishing_order == 2);
}

TEST_CASE("newton polygon vs splitting-field oracle") {
    std::mt19937_64 rng(20260810);
    std::vector<Int> primes{Int(2), Int(3), Int(5), Int(7), Int(11), Int(13), Int(23), Int(47)};
    int done = 0;
    while (done < 300) {
        Int p = primes[rng() % primes.size()];
        std::vector<Rat> expected;
        IntPoly f = IntPoly::constant(1);
        int pieces = 1 + static_cast<int>(rng() % 2);
        long degree = 0;
        for (int k = 0; k < pieces && degree < 4; ++k) {
            if (rng() % 2 == 0) {
                long q = 1 + static_cast<long>(rng() % 8);
                long pr = static_cast<long>(rng() % 17) - 8;
                if (pr == 0) pr = 3;
                Int g = gcd(Int(q), Int(std::abs(pr)));
                Int qq = Int(q) / g, pp = Int(pr) / g;
                f = mul(f, IntPoly({Int(-pp), qq}));
                expected.push_back(Rat(valuation(pp, p) - valuation(qq, p)));
                degree += 1;
            } else {
                Int a(static_cast<long>(rng() % 15) - 7);
                Int b(1 + static_cast<long>(rng() % 5));
                Int D(static_cast<long>(rng() % 19) - 9);
                if (D == 0) D = 2;
                Int s = sqrt(Int(abs(D)));
                if (D > 0 && s * s == D) D += 1;  // keep D a non-square
                if (D == 1) D = 2;
                f = mul(f, IntPoly({a * a - b * b * D, Int(-2) * a, Int(1)}));
                for (auto& v : quad_root_valuations(a, b, D, p)) expected.push_back(v);
                degree += 2;
            }
        }
        std::sort(expected.begin(), expected.end());
        auto got = root_valuations(f, p);
        REQUIRE(got.size() == expected.size());
        CHECK(got == expected);
        ++done;
    }
}

TEST_CASE("serialization wire formats") {
    IntPoly f({-16, 0, 0, 0, 1});
    auto j = poly_to_json(f);
    CHECK(j.dump() == R"(["-16","0","0","0","1"])");
    CHECK(poly_from_json(nlohmann::json::parse(j.dump())) == f);
    CHECK(rat_to_string(make_rat(Int(3), Int(8))) == "3/8");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_from_string("3/8") == make_rat(Int(3), Int(8)));
}
