#include "backorb/factor/factorize.hpp"

#include <algorithm>
#include <stdexcept>

#include "backorb/kernels/modpoly.hpp"

namespace backorb::factor {

using exactnum::add;
using exactnum::mul;
using exactnum::sub;

IntPoly Factorization::expand() const {
    std::vector<Rat> acc{unit};
    IntPoly prod = IntPoly::constant(1);
    for (const auto& t : factors) prod = mul(prod, exactnum::pow(t.poly, t.multiplicity));
    // unit is rational; expansion only meaningful when the product clears it
    std::vector<Rat> coeffs(prod.coeffs().size());
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Rat(prod[i]) * unit;
    for (const auto& q : coeffs)
        if (q.get_den() != 1) throw std::logic_error("factorization does not expand integrally");
    std::vector<Int> out(coeffs.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = Int(coeffs[i].get_num());
    return IntPoly(std::move(out));
}

void Factorization::sort() {
    std::sort(factors.begin(), factors.end(), [](const FactorTerm& a, const FactorTerm& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.coeffs() < b.poly.coeffs();
    });
}

namespace {

// ---- arithmetic mod M on IntPoly (coefficients kept in [0, M)) ----

IntPoly reduce_mod(const IntPoly& f, const Int& M) {
    std::vector<Int> v(f.coeffs());
    for (auto& x : v) {
        x %= M;
        if (x < 0) x += M;
    }
    return IntPoly(std::move(v));
}

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const Int& M) { return reduce_mod(mul(a, b), M); }
IntPoly addmod(const IntPoly& a, const IntPoly& b, const Int& M) { return reduce_mod(add(a, b), M); }
IntPoly submod(const IntPoly& a, const IntPoly& b, const Int& M) { return reduce_mod(sub(a, b), M); }

// division by a monic divisor, coefficientwise mod M
void divrem_monic_mod(const IntPoly& a, const IntPoly& g, const Int& M, IntPoly& q, IntPoly& r) {
    long da = a.degree(), dg = g.degree();
    if (dg < 0 || g.leading() != 1) throw std::logic_error("divisor must be monic");
    if (da < dg) {
        q = IntPoly();
        r = a;
        return;
    }
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quo(static_cast<size_t>(da - dg) + 1, Int(0));
    for (long k = da; k >= dg; --k) {
        Int t = rem[static_cast<size_t>(k)] % M;
        if (t < 0) t += M;
        if (t != 0) {
            quo[static_cast<size_t>(k - dg)] = t;
            for (long j = 0; j <= dg; ++j) {
                Int& c = rem[static_cast<size_t>(k - dg + j)];
                c = (c - t * g[static_cast<size_t>(j)]) % M;
            }
        } else {
            rem[static_cast<size_t>(k)] = 0;
        }
    }
    for (auto& c : rem)
        if (c < 0) c += M;
    rem.resize(static_cast<size_t>(dg));
    q = reduce_mod(IntPoly(std::move(quo)), M);
    r = IntPoly(std::move(rem));
}

IntPoly symmetric_lift(const IntPoly& f, const Int& M) {
    std::vector<Int> v(f.coeffs());
    Int half = M / 2;
    for (auto& x : v) {
        x %= M;
        if (x < 0) x += M;
        if (x * 2 > M) x -= M;
    }
    return IntPoly(std::move(v));
}

IntPoly from_modpoly(const kernels::ModPoly& f) {
    std::vector<Int> v(f.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = Int(f.coeffs()[i]);
    return IntPoly(std::move(v));
}

// one quadratic Hensel step: from modulus m to m2 = m^2 (or a divisor),
// maintaining f = g h and a g + b h = 1, g monic
struct HenselPair {
    IntPoly g, h, a, b;
};

HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Int& m2) {
    IntPoly e = submod(f, mulmod(in.g, in.h, m2), m2);
    IntPoly q, r;
    divrem_monic_mod(mulmod(in.b, e, m2), in.g, m2, q, r);
    IntPoly gs = addmod(in.g, r, m2);
    IntPoly hs = addmod(in.h, addmod(mulmod(in.a, e, m2), mulmod(q, in.h, m2), m2), m2);
    IntPoly es = submod(addmod(mulmod(in.a, gs, m2), mulmod(in.b, hs, m2), m2),
                        IntPoly::constant(1), m2);
    // a is the cofactor of g, so its correction reduces modulo the (monic)
    // cofactor h*, and the quotient shifts into b against g*.
    IntPoly qs, rs;
    divrem_monic_mod(mulmod(in.a, es, m2), hs, m2, qs, rs);
    IntPoly as = submod(in.a, rs, m2);
    IntPoly bs = submod(in.b, addmod(mulmod(in.b, es, m2), mulmod(qs, gs, m2), m2), m2);
    return {gs, hs, as, bs};
}

// extended euclid over F_p for the initial Bezout pair
void bezout_mod_p(const kernels::ModPoly& g, const kernels::ModPoly& h, uint32_t p, IntPoly& a,
                  IntPoly& b) {
    using namespace kernels;
    ModPoly r0 = g, r1 = h;
    ModPoly s0({1}, p), s1({}, p), t0({}, p), t1({1}, p);
    while (!r1.is_zero()) {
        ModPoly q, r;
        mp_divrem(r0, r1, q, r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1));
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw std::logic_error("modular factors not coprime");
    uint32_t inv = inv_mod(r0.leading(), p);
    a = from_modpoly(mp_scale(s0, inv));
    b = from_modpoly(mp_scale(t0, inv));
}

// lift f = prod(parts) from mod p to mod p^K (tree, quadratic steps)
void hensel_tree(const IntPoly& f, const std::vector<kernels::ModPoly>& parts, size_t lo,
                 size_t hi, uint32_t p, const Int& target, std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(reduce_mod(f, target));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    kernels::ModPoly g0({1}, p), h0({1}, p);
    for (size_t i = lo; i < mid; ++i) g0 = kernels::mp_mul(g0, parts[i]);
    for (size_t i = mid; i < hi; ++i) h0 = kernels::mp_mul(h0, parts[i]);
    HenselPair hp;
    hp.g = from_modpoly(g0);
    hp.h = from_modpoly(h0);
    bezout_mod_p(g0, h0, p, hp.a, hp.b);
    Int m(p);
    while (m < target) {
        Int m2 = m * m;
        hp = hensel_step(reduce_mod(f, m2), hp, m2);
        m = m2;
    }
    hp.g = reduce_mod(hp.g, target);
    hp.h = reduce_mod(hp.h, target);
    hensel_tree(hp.g, parts, lo, mid, p, target, out);
    hensel_tree(hp.h, parts, mid, hi, p, target, out);
}

// degrees attainable as subset sums of the mod-q factorization degrees,
// intersected over two extra good primes
std::vector<bool> degree_bitset(const IntPoly& g, uint32_t skip_p) {
    size_t n = static_cast<size_t>(g.degree());
    std::vector<bool> ok(n + 1, true);
    Int pz(1);
    int found = 0;
    while (found < 2 && pz < 5000) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        uint32_t p = static_cast<uint32_t>(pz.get_ui());
        if (p == skip_p) continue;
        if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) continue;
        auto gp = kernels::ModPoly::from_int_poly(g, p);
        if (kernels::mp_gcd(gp, kernels::mp_derivative(gp)).degree() != 0) continue;
        auto mf = kernels::mp_factor(gp);
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (const auto& t : mf.factors) {
            size_t dd = static_cast<size_t>(t.poly.degree());
            for (size_t s = n + 1; s-- > 0;)
                if (sums[s] && s + dd <= n) sums[s + dd] = true;
        }
        for (size_t i = 0; i <= n; ++i) ok[i] = ok[i] && sums[i];
        ++found;
    }
    return ok;
}

// factor a monic squarefree integer polynomial of degree >= 1
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& g) {
    using namespace kernels;
    if (g.degree() == 1) return {g};

    // prime selection: smallest primes where g stays squarefree; among the
    // first candidates keep the one with the fewest modular factors, which
    // bounds the recombination search
    struct Choice {
        uint32_t p;
        ModFactorization mf;
    };
    std::vector<Choice> choices;
    uint32_t p = 1;
    Int pz(1);
    while (choices.size() < 5 && pz < 10000) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        p = static_cast<uint32_t>(pz.get_ui());
        auto gp = ModPoly::from_int_poly(g, p);
        if (gp.degree() != g.degree()) continue;  // cannot happen for monic
        if (mp_gcd(gp, mp_derivative(gp)).degree() != 0) continue;
        choices.push_back({p, mp_factor(gp)});
        if (choices.back().mf.factors.size() == 1) break;
    }
    if (choices.empty()) throw std::logic_error("no good prime found");
    size_t best = 0;
    for (size_t i = 1; i < choices.size(); ++i)
        if (choices[i].mf.factors.size() < choices[best].mf.factors.size()) best = i;
    p = choices[best].p;
    auto& mf = choices[best].mf;
    if (mf.factors.size() == 1) return {g};

    // Landau-Mignotte style bound on factor coefficients, doubled for
    // symmetric representatives
    Int norm2 = [&] {
        Int s(0);
        for (const auto& c : g.coeffs()) s += c * c;
        return Int(sqrt(s) + 1);
    }();
    Int bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(g.degree() + 2));
    bound *= norm2;
    Int target(p);
    while (target <= 2 * bound) target *= p;

    std::vector<ModPoly> parts;
    for (auto& t : mf.factors) parts.push_back(t.poly);
    std::vector<IntPoly> lifted;
    hensel_tree(reduce_mod(g, target), parts, 0, parts.size(), p, target, lifted);

    auto degree_ok = degree_bitset(g, p);

    // subset recombination
    std::vector<IntPoly> out;
    std::vector<size_t> active(lifted.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = i;
    IntPoly remaining = g;

    auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
        long dsum = 0;
        for (size_t i : subset) dsum += lifted[active[i]].degree();
        if (dsum > remaining.degree()) return false;
        if (static_cast<size_t>(dsum) < degree_ok.size() && !degree_ok[static_cast<size_t>(dsum)])
            return false;
        IntPoly prod = IntPoly::constant(1);
        // trailing-coefficient early abort
        Int trail(1);
        for (size_t i : subset) trail = (trail * lifted[active[i]].coeff(0)) % target;
        if (trail < 0) trail += target;
        if (trail * 2 > target) trail -= target;
        Int r0 = remaining.coeff(0);
        if (r0 != 0 && trail != 0 && !mpz_divisible_p(r0.get_mpz_t(), trail.get_mpz_t()))
            return false;
        for (size_t i : subset) prod = mulmod(prod, lifted[active[i]], target);
        IntPoly cand = symmetric_lift(prod, target);
        IntPoly q;
        if (!exactnum::try_divide(remaining, cand, &q)) return false;
        out.push_back(cand);
        remaining = q;
        std::vector<size_t> next;
        for (size_t i = 0; i < active.size(); ++i)
            if (std::find(subset.begin(), subset.end(), i) == subset.end())
                next.push_back(active[i]);
        active = next;
        return true;
    };

    size_t card = 1;
    while (2 * card <= active.size()) {
        // iterate subsets of the current active list of size card
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            if (try_subset(idx)) {
                found = true;
                break;
            }
            // next combination
            long i = static_cast<long>(card) - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] ==
                                 active.size() - card + static_cast<size_t>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++card;
        // after a hit, retry the same cardinality against the reduced set
    }
    if (remaining.degree() > 0) out.push_back(remaining);
    return out;
}

// factor a primitive squarefree polynomial with positive leading coefficient
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& g) {
    if (g.degree() == 1) return {g};
    const Int& l = g.leading();
    if (l == 1) return factor_monic_squarefree(g);
    // monic transform: ghat(z) = l^(n-1) g(z/l), factors map back by scaling
    size_t n = static_cast<size_t>(g.degree());
    std::vector<Int> v(n + 1);
    v[n] = 1;
    Int pw(1);  // l^(n-1-j)
    for (size_t j = n; j-- > 0;) {
        v[j] = g[j] * pw;
        pw *= l;
    }
    IntPoly ghat(std::move(v));
    auto parts = factor_monic_squarefree(ghat);
    std::vector<IntPoly> out;
    out.reserve(parts.size());
    for (const auto& h : parts)
        out.push_back(exactnum::primitive_positive(exactnum::scale_arg(h, Rat(l))));
    return out;
}

}  // namespace

Factorization factor_over_Q(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor of zero polynomial");
    Factorization out;
    Int c = exactnum::content(f);
    IntPoly g = exactnum::primitive_part(f);
    if (g.leading() < 0) {
        g = exactnum::neg(g);
        c = -c;
    }
    out.unit = Rat(c);
    for (auto& [part, mult] : exactnum::squarefree_decomposition(g)) {
        for (auto& irr : factor_squarefree_primitive(part)) out.factors.push_back({irr, mult});
    }
    out.sort();
    return out;
}

Factorization factor_rational_poly(const IntPoly& f, const Rat& u0) {
    Factorization out = factor_over_Q(f);
    out.unit *= u0;
    return out;
}

bool is_irreducible(const IntPoly& f) {
    IntPoly g = exactnum::primitive_positive(f);
    if (g.degree() < 1) return false;
    auto fac = factor_over_Q(g);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::vector<Rat> rational_roots(const IntPoly& f_in) {
    using namespace kernels;
    if (f_in.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
    std::vector<Rat> out;
    IntPoly f = exactnum::primitive_positive(f_in);
    size_t vanish = 0;
    while (vanish < f.coeffs().size() && f[vanish] == 0) ++vanish;
    if (vanish > 0) {
        out.emplace_back(0);
        std::vector<Int> c(f.coeffs().begin() + static_cast<long>(vanish), f.coeffs().end());
        f = IntPoly(std::move(c));
    }
    if (f.degree() < 1) {
        std::sort(out.begin(), out.end());
        return out;
    }
    f = exactnum::squarefree_part(f);

    // any root a/b in lowest terms has b | lc and |a| <= |c0| + ... ; the
    // Cauchy bound |a|,|b| <= |lc| + height(f) is enough for reconstruction
    Int B = abs(f.leading()) + exactnum::height(f);
    Int bound2 = 2 * B * B + 1;

    // good prime: squarefree reduction, full degree
    uint32_t p = 0;
    Int pz(1000);
    ModPoly fp;
    while (true) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        p = static_cast<uint32_t>(pz.get_ui());
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
        fp = ModPoly::from_int_poly(f, p);
        if (mp_gcd(fp, mp_derivative(fp)).degree() != 0) continue;
        break;
    }

    // roots mod p by direct scan
    std::vector<uint32_t> roots_p;
    for (uint32_t x = 0; x < p; ++x)
        if (mp_eval(fp, x) == 0) roots_p.push_back(x);

    IntPoly fd = exactnum::derivative(f);
    for (uint32_t r0 : roots_p) {
        // Newton lift r against f to modulus >= bound2
        Int m(p), r(r0);
        while (m < bound2) {
            Int m2 = m * m;
            Int fr = exactnum::eval(f, r) % m2;
            Int dr = exactnum::eval(fd, r) % m2;
            Int dinv;
            if (mpz_invert(dinv.get_mpz_t(), dr.get_mpz_t(), m2.get_mpz_t()) == 0) break;
            r = (r - fr * dinv) % m2;
            if (r < 0) r += m2;
            m = m2;
        }
        if (m < bound2) continue;
        // rational reconstruction: find a/b = r mod m with |a|, b <= B
        Int s0 = m, s1 = r, t0(0), t1(1);
        while (s1 > B) {
            Int q = s0 / s1;
            Int s2 = s0 - q * s1, t2 = t0 - q * t1;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if (t1 == 0 || abs(t1) > B) continue;
        Int num = s1, den = t1;
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (gcd(num, den) != 1) continue;
        if (exactnum::eval_homogeneous(f, num, den) == 0) out.push_back(exactnum::make_rat(num, den));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace backorb::factor
