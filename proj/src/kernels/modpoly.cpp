#include "backorb/kernels/modpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace backorb::kernels {

uint32_t pow_mod_u32(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow_mod_u32(a, p - 2, p);
}

ModPoly ModPoly::from_int_poly(const IntPoly& f, uint32_t p) {
    std::vector<uint32_t> v(f.coeffs().size());
    Int ip(p);
    for (size_t i = 0; i < v.size(); ++i) {
        Int r = f[i] % ip;
        if (r < 0) r += ip;
        v[i] = static_cast<uint32_t>(r.get_ui());
    }
    return ModPoly(std::move(v), p);
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b) {
    uint32_t p = a.modulus() ? a.modulus() : b.modulus();
    std::vector<uint32_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    std::copy(a.coeffs().begin(), a.coeffs().end(), v.begin());
    const auto& K = active_kernels();
    if (!b.is_zero()) {
        // add b into the prefix
        K.vec_add(v.data(), b.coeffs().data(), v.data(), b.coeffs().size(), p);
    }
    return ModPoly(std::move(v), p);
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b) {
    uint32_t p = a.modulus() ? a.modulus() : b.modulus();
    std::vector<uint32_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    std::copy(a.coeffs().begin(), a.coeffs().end(), v.begin());
    const auto& K = active_kernels();
    if (!b.is_zero()) {
        K.vec_sub(v.data(), b.coeffs().data(), v.data(), b.coeffs().size(), p);
    }
    return ModPoly(std::move(v), p);
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    uint32_t p = a.modulus() ? a.modulus() : b.modulus();
    if (a.is_zero() || b.is_zero()) return ModPoly({}, p);
    std::vector<uint32_t> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
    const auto& K = active_kernels();
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        uint32_t w = a.coeffs()[i];
        if (w == 0) continue;
        uint32_t wp = shoup_precompute(w, p);
        K.vec_axpy(v.data() + i, b.coeffs().data(), b.coeffs().size(), w, wp, p);
    }
    return ModPoly(std::move(v), p);
}

ModPoly mp_scale(const ModPoly& a, uint32_t w) {
    uint32_t p = a.modulus();
    if (a.is_zero() || w == 0) return ModPoly({}, p);
    std::vector<uint32_t> v(a.coeffs().size());
    uint32_t wp = shoup_precompute(w, p);
    active_kernels().vec_scale(a.coeffs().data(), v.data(), v.size(), w, wp, p);
    return ModPoly(std::move(v), p);
}

ModPoly mp_monic(const ModPoly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return mp_scale(a, inv_mod(a.leading(), a.modulus()));
}

void mp_divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    if (b.is_zero()) throw std::domain_error("mod-p division by zero");
    uint32_t p = b.modulus();
    long da = a.degree(), db = b.degree();
    if (da < db) {
        q = ModPoly({}, p);
        r = a;
        return;
    }
    std::vector<uint32_t> rem(a.coeffs());
    std::vector<uint32_t> quo(static_cast<size_t>(da - db) + 1, 0);
    uint32_t linv = inv_mod(b.leading(), p);
    const auto& K = active_kernels();
    for (long k = da; k >= db; --k) {
        uint32_t t = rem[static_cast<size_t>(k)];
        if (t == 0) continue;
        uint32_t factor = static_cast<uint32_t>(static_cast<uint64_t>(t) * linv % p);
        quo[static_cast<size_t>(k - db)] = factor;
        // rem[k-db .. k] -= factor * b, via axpy with -factor
        uint32_t w = p - factor;
        uint32_t wp = shoup_precompute(w, p);
        K.vec_axpy(rem.data() + (k - db), b.coeffs().data(), b.coeffs().size(), w, wp, p);
        rem[static_cast<size_t>(k)] = 0;
    }
    rem.resize(static_cast<size_t>(std::max(db, 0L)));
    q = ModPoly(std::move(quo), p);
    r = ModPoly(std::move(rem), p);
}

ModPoly mp_rem(const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    mp_divrem(a, b, q, r);
    return r;
}

ModPoly mp_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly f = a, g = b;
    while (!g.is_zero()) {
        ModPoly r = mp_rem(f, g);
        f = g;
        g = r;
    }
    return mp_monic(f);
}

ModPoly mp_derivative(const ModPoly& a) {
    if (a.degree() <= 0) return ModPoly({}, a.modulus());
    uint32_t p = a.modulus();
    std::vector<uint32_t> v(a.coeffs().size() - 1);
    for (size_t i = 1; i < a.coeffs().size(); ++i)
        v[i - 1] = static_cast<uint32_t>(static_cast<uint64_t>(a.coeffs()[i]) * (i % p) % p);
    return ModPoly(std::move(v), p);
}

ModPoly mp_powmod(const ModPoly& base, const Int& e, const ModPoly& f) {
    uint32_t p = f.modulus();
    ModPoly r({1}, p);
    ModPoly b = mp_rem(base, f);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mp_rem(mp_mul(r, r), f);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_rem(mp_mul(r, b), f);
    }
    return r;
}

uint32_t mp_eval(const ModPoly& a, uint32_t x) {
    uint32_t p = a.modulus();
    uint64_t r = 0;
    for (size_t i = a.coeffs().size(); i-- > 0;) r = (r * x + a.coeffs()[i]) % p;
    return static_cast<uint32_t>(r);
}

ModPoly mp_monomial(uint32_t coeff, size_t k, uint32_t p) {
    std::vector<uint32_t> v(k + 1, 0);
    v[k] = coeff % p;
    return ModPoly(std::move(v), p);
}

namespace {

// f with only p-th power exponents: substitute z^(1/p).
ModPoly mp_root_substitute(const ModPoly& f) {
    uint32_t p = f.modulus();
    std::vector<uint32_t> v(f.coeffs().size() / p + 1, 0);
    for (size_t i = 0; i < f.coeffs().size(); i += p) v[i / p] = f.coeffs()[i];
    return ModPoly(std::move(v), p);
}

ModPoly mp_quo(const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    mp_divrem(a, b, q, r);
    return q;
}

// monic squarefree decomposition over F_p, handling the char-p collapse
// f = prod out_i ^ mult_i with each out_i monic squarefree
void mp_squarefree(const ModPoly& f, unsigned mult, std::vector<std::pair<ModPoly, unsigned>>& out) {
    uint32_t p = f.modulus();
    if (f.degree() <= 0) return;
    ModPoly fp = mp_derivative(f);
    if (fp.is_zero()) {
        // f = g(z^p) = g(z)^p over F_p
        mp_squarefree(mp_root_substitute(f), mult * p, out);
        return;
    }
    ModPoly c = mp_gcd(f, fp);
    ModPoly w = mp_quo(mp_monic(f), c);
    unsigned i = 1;
    while (w.degree() > 0) {
        ModPoly y = mp_gcd(w, c);
        ModPoly piece = mp_quo(w, y);
        if (piece.degree() > 0) out.emplace_back(mp_monic(piece), mult * i);
        w = y;
        c = mp_quo(c, y);
        ++i;
    }
    if (c.degree() > 0) mp_squarefree(c, mult, out);
}

// distinct-degree factorization of monic squarefree f: [(product, degree)]
std::vector<std::pair<ModPoly, long>> mp_ddf(const ModPoly& f) {
    uint32_t p = f.modulus();
    std::vector<std::pair<ModPoly, long>> out;
    ModPoly x = mp_monomial(1, 1, p);
    ModPoly h = x;  // x^(p^i) mod f
    ModPoly rest = f;
    long d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.emplace_back(rest, rest.degree());
            break;
        }
        h = mp_powmod(h, Int(p), rest);
        ModPoly g = mp_gcd(mp_sub(h, x), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            ModPoly q, r;
            mp_divrem(rest, g, q, r);
            rest = q;
            h = mp_rem(h, rest);
        }
    }
    return out;
}

// equal-degree splitting of monic squarefree f whose irreducible factors
// all have degree d (Cantor-Zassenhaus; trace map for p = 2)
void mp_edf(const ModPoly& f, long d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    uint32_t p = f.modulus();
    if (f.degree() == d) {
        out.push_back(mp_monic(f));
        return;
    }
    long n = f.degree();
    ModPoly splitter({}, p);
    while (true) {
        std::vector<uint32_t> rc(static_cast<size_t>(n), 0);
        for (auto& c : rc) c = static_cast<uint32_t>(rng() % p);
        ModPoly r(std::move(rc), p);
        if (r.degree() < 1) continue;
        ModPoly g = mp_gcd(r, f);
        if (g.degree() > 0 && g.degree() < n) {
            splitter = g;
            break;
        }
        ModPoly t({}, p);
        if (p == 2) {
            // trace map sum_{i<d} r^(2^i)
            ModPoly acc = mp_rem(r, f);
            ModPoly term = acc;
            for (long i = 1; i < d; ++i) {
                term = mp_rem(mp_mul(term, term), f);
                acc = mp_add(acc, term);
            }
            t = acc;
        } else {
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            t = mp_sub(mp_powmod(r, e, f), ModPoly({1}, p));
        }
        ModPoly g2 = mp_gcd(t, f);
        if (g2.degree() > 0 && g2.degree() < n) {
            splitter = g2;
            break;
        }
    }
    ModPoly q, r2;
    mp_divrem(f, splitter, q, r2);
    mp_edf(splitter, d, rng, out);
    mp_edf(q, d, rng, out);
}

}  // namespace

ModFactorization mp_factor(const ModPoly& f, uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factor of zero polynomial");
    ModFactorization out;
    out.unit = f.leading();
    if (f.degree() == 0) return out;
    std::vector<std::pair<ModPoly, unsigned>> sqf;
    mp_squarefree(mp_monic(f), 1, sqf);
    std::mt19937_64 rng(seed);
    for (auto& [g, m] : sqf) {
        for (auto& [h, d] : mp_ddf(g)) {
            std::vector<ModPoly> irr;
            mp_edf(h, d, rng, irr);
            for (auto& q : irr) out.factors.push_back({q, m});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.coeffs() < b.poly.coeffs();
    });
    return out;
}

uint32_t mp_resultant(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of zero");
    uint32_t p = a.modulus();
    ModPoly f = a, g = b;
    uint64_t res = 1;
    bool neg = false;
    while (g.degree() > 0) {
        ModPoly r = mp_rem(f, g);
        long df = f.degree(), dg = g.degree(), dr = r.is_zero() ? -1 : r.degree();
        if (r.is_zero()) return 0;
        // res *= lc(g)^(df - dr), sign (-1)^(df*dg)
        res = res * pow_mod_u32(g.leading(), static_cast<uint64_t>(df - dr), p) % p;
        if ((df & 1) && (dg & 1)) neg = !neg;
        f = g;
        g = r;
    }
    // g is a nonzero constant
    res = res * pow_mod_u32(g.coeff(0), static_cast<uint64_t>(f.degree()), p) % p;
    uint32_t out = static_cast<uint32_t>(res);
    if (neg && out) out = p - out;
    return out;
}

}  // namespace backorb::kernels
