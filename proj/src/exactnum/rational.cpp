#include "backorb/exactnum/rational.hpp"

#include <algorithm>
#include <cstdlib>

namespace backorb::exactnum {

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw ValuationOfZero();
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& q, const Int& p) {
    if (q == 0) throw ValuationOfZero();
    long vn = valuation(Int(q.get_num()), p);
    long vd = valuation(Int(q.get_den()), p);
    return vn - vd;
}

std::optional<Rat> rat_nth_root(const Rat& q, unsigned long n) {
    if (n == 0) throw std::invalid_argument("0th root");
    if (q == 0) return Rat(0);
    if (q < 0 && n % 2 == 0) return std::nullopt;
    Int num = abs(Int(q.get_num()));
    Int den = q.get_den();
    Int rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
    if (q < 0) rn = -rn;
    return make_rat(rn, rd);
}

PowerDecomposition max_power_decomposition(const Rat& q) {
    if (q == 0 || q == 1 || q == -1)
        throw std::invalid_argument("power decomposition needs |q| != 0, 1");
    // H(u)^e = H(q) bounds e: the height of q is at least 2^e.
    Int num = abs(Int(q.get_num()));
    Int den = q.get_den();
    size_t hbits = std::max(mpz_sizeinbase(num.get_mpz_t(), 2), mpz_sizeinbase(den.get_mpz_t(), 2));
    for (unsigned long e = static_cast<unsigned long>(hbits); e >= 2; --e) {
        if (q < 0 && e % 2 == 0) continue;
        if (auto u = rat_nth_root(q, e)) {
            // Even exponents get the positive root (there q > 0 and the
            // integer nth root is positive already).
            return {e, *u};
        }
    }
    return {1, q};
}

Int strip_factors(Int n, const std::vector<Int>& moduli) {
    n = abs(n);
    if (n == 0) return n;
    for (const Int& m : moduli) {
        Int g = gcd(n, m);
        while (g > 1) {
            while (mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t()))
                mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
            g = gcd(n, m);
        }
    }
    return n;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_rho(const Int& n, unsigned long c, unsigned long budget) {
    // Brent-style cycle walk; n must be odd composite with no tiny factors.
    Int x(2), y(2), d(1), diff;
    Int cc(c);
    auto f = [&](const Int& v) { return Int((v * v + cc) % n); };
    unsigned long power = 1, lam = 0, steps = 0;
    while (d == 1) {
        if (++steps > budget) return Int(0);
        if (lam == power) {
            x = y;
            power *= 2;
            lam = 0;
        }
        y = f(y);
        ++lam;
        diff = abs(x - y);
        if (diff == 0) return Int(0);
        d = gcd(diff, n);
    }
    if (d == n) return Int(0);
    return d;
}

}  // namespace

FactorProbe probe_prime_factor(const Int& n_in, unsigned long rho_budget) {
    Int n = abs(n_in);
    if (n <= 1) throw std::invalid_argument("factor probe needs |n| > 1");
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul})
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {Int(p), true};
    Int p(37);
    while (p * p <= n && p < 1000000) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return {p, true};
    }
    if (p * p > n) return {n, true};
    if (is_probable_prime(n)) return {n, true};
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Int r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), e)) return probe_prime_factor(r, rho_budget);
        }
    }
    unsigned long spent = 0;
    for (unsigned long c = 1; c < 64 && spent < rho_budget; ++c) {
        unsigned long slice = std::min<unsigned long>(rho_budget - spent, rho_budget / 4 + 1);
        Int d = pollard_rho(n, c, slice);
        spent += slice;
        if (d > 1 && d < n) {
            auto a = probe_prime_factor(d, rho_budget);
            if (!a.prime) return a;
            Int rest = n / d;
            if (rest > 1) {
                // the cofactor may hide a smaller prime; probe it cheaply
                auto b = probe_prime_factor(rest, rho_budget / 4);
                if (b.prime && b.divisor < a.divisor) return b;
            }
            return a;
        }
    }
    // budget exhausted: the composite itself still divides the input
    return {n, false};
}

Int some_prime_factor(const Int& n) {
    auto probe = probe_prime_factor(n, 1ul << 24);
    if (!probe.prime) throw std::runtime_error("factoring budget exhausted");
    return probe.divisor;
}

}  // namespace backorb::exactnum
