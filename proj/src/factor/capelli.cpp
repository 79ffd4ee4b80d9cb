#include "backorb/factor/capelli.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "backorb/exactnum/cyclotomic.hpp"

namespace backorb::factor {

using exactnum::cyclotomic;
using exactnum::divisors;
using exactnum::make_rat;
using exactnum::rat_nth_root;

std::optional<Rat> is_pth_power(const Rat& q, unsigned long p) {
    if (q == 0) throw std::invalid_argument("is_pth_power of zero");
    return rat_nth_root(q, p);
}

std::set<Rat> root_set(const Rat& beta, unsigned long n_max) {
    if (beta == 0) throw std::invalid_argument("root_set of zero");
    std::set<Rat> out;
    for (unsigned long k = 1; k <= n_max; ++k) {
        if (auto r = rat_nth_root(beta, k)) {
            out.insert(*r);
            if (k % 2 == 0) out.insert(Rat(-*r));
        }
    }
    return out;
}

namespace {

// ---- arithmetic in the two euclidean imaginary quadratic fields ----
// GAUSS:  omega = i,      omega^2 = -1,        N(a+b i)      = a^2 + b^2
// EISEN:  omega = zeta_3, omega^2 = -1 - omega, N(a+b zeta_3) = a^2 - ab + b^2

enum class QuadField { Gauss, Eisen };

struct QuadElem {
    QuadField field;
    Rat a, b;  // a + b*omega

    bool rational() const { return b == 0; }
    Rat trace() const { return field == QuadField::Gauss ? Rat(2 * a) : Rat(2 * a - b); }
    Rat norm() const {
        return field == QuadField::Gauss ? Rat(a * a + b * b) : Rat(a * a - a * b + b * b);
    }
    QuadElem conj() const {
        if (field == QuadField::Gauss) return {field, a, Rat(-b)};
        return {field, Rat(a - b), Rat(-b)};
    }
    QuadElem operator*(const QuadElem& o) const {
        Rat ac = a * o.a, bd = b * o.b, cross = a * o.b + b * o.a;
        if (field == QuadField::Gauss) return {field, Rat(ac - bd), cross};
        return {field, Rat(ac - bd), Rat(cross - bd)};
    }
    QuadElem operator-() const { return {field, Rat(-a), Rat(-b)}; }
    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

QuadElem quad_pow(QuadElem base, unsigned long e) {
    QuadElem r{base.field, Rat(1), Rat(0)};
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Exact q-th root in the field: enumerate integral candidates of the right
// norm and verify.  Returns nullopt when no root exists in the field, or
// when the norm-equation enumeration would be unreasonably large (callers
// then fall back to the general factorizer, keeping answers exact).
std::optional<QuadElem> quad_nth_root(const QuadElem& w, unsigned long q) {
    Int D = lcm(Int(w.a.get_den()), Int(w.b.get_den()));
    // (s D)^q = w D^q, so sD is integral with norm N(w)^{1/q} * D^2
    Rat nw = w.norm();
    Rat target_norm_rat = nw;
    Int D2q;
    mpz_pow_ui(D2q.get_mpz_t(), D.get_mpz_t(), 2 * q);
    target_norm_rat *= Rat(D2q);
    if (target_norm_rat.get_den() != 1) return std::nullopt;
    Int tnorm(target_norm_rat.get_num());
    Int t0;
    if (!mpz_root(t0.get_mpz_t(), tnorm.get_mpz_t(), q)) return std::nullopt;
    // t0 = N(sigma) for sigma = s*D
    if (t0 > 100000000) return std::nullopt;  // enumeration budget
    QuadElem T{w.field, w.a, w.b};
    {
        Int Dq;
        mpz_pow_ui(Dq.get_mpz_t(), D.get_mpz_t(), q);
        T.a *= Rat(Dq);
        T.b *= Rat(Dq);
    }
    // enumerate sigma = x + y*omega with N(sigma) = t0
    double t0d = t0.get_d();
    long xmax = static_cast<long>((w.field == QuadField::Gauss ? std::sqrt(t0d) : std::sqrt(4.0 * t0d / 3.0)) + 2);
    for (long x = -xmax; x <= xmax; ++x) {
        // Gauss: y^2 = t0 - x^2;  Eisen: y^2 - xy + (x^2 - t0) = 0
        std::vector<Int> ys;
        if (w.field == QuadField::Gauss) {
            Int rest = t0 - Int(x) * Int(x);
            if (rest < 0) continue;
            Int y = sqrt(rest);
            if (y * y == rest) {
                ys.push_back(y);
                if (y != 0) ys.push_back(-y);
            }
        } else {
            // discriminant x^2 - 4(x^2 - t0) = 4 t0 - 3 x^2
            Int disc = 4 * t0 - 3 * Int(x) * Int(x);
            if (disc < 0) continue;
            Int s = sqrt(disc);
            if (s * s != disc) continue;
            for (Int num : {Int(Int(x) + s), Int(Int(x) - s)}) {
                if (num % 2 == 0) ys.push_back(num / 2);
            }
        }
        for (const Int& y : ys) {
            QuadElem sigma{w.field, Rat(Int(x)), Rat(y)};
            if (quad_pow(sigma, q) == T) {
                return QuadElem{w.field, Rat(sigma.a / Rat(D)), Rat(sigma.b / Rat(D))};
            }
        }
    }
    return std::nullopt;
}

// ---- the factoring engine ----

struct Engine {
    std::vector<IntPoly> factors;
    CapelliTrace trace;

    void emit(const IntPoly& f) { factors.push_back(exactnum::primitive_positive(f)); }

    void step(std::string kind, unsigned long prime, Rat root, unsigned long residual) {
        trace.steps.push_back({std::move(kind), prime, std::move(root), residual});
    }

    // primitive integer model of z^m - b
    static IntPoly binomial_poly(unsigned long m, const Rat& b) {
        std::vector<Int> c(m + 1, Int(0));
        c[0] = -Int(b.get_num());
        c[m] = Int(b.get_den());
        return IntPoly(std::move(c));
    }

    // primitive integer model of Norm(z^v - w) = z^2v - Tr(w) z^v + N(w)
    static IntPoly norm_poly(unsigned long v, const QuadElem& w) {
        std::vector<Rat> c(2 * v + 1, Rat(0));
        c[0] = w.norm();
        c[v] = -w.trace();
        c[2 * v] = Rat(1);
        Rat unit;
        return exactnum::clear_denominators(c, &unit);
    }

    void general_piece(const IntPoly& piece) {
        step("general", 0, Rat(0), 0);
        auto fac = factor_over_Q(piece);
        for (auto& t : fac.factors)
            for (unsigned i = 0; i < t.multiplicity; ++i) emit(t.poly);
    }

    // z^m - 1 (sign +1) or z^m + 1 (sign -1) via cyclotomic products
    void cyclotomic_piece(unsigned long m, int sign) {
        step("cyclotomic", 0, Rat(sign), m);
        if (sign > 0) {
            for (unsigned long d : divisors(m)) emit(cyclotomic(d));
        } else {
            for (unsigned long d : divisors(2 * m))
                if ((2 * m) % d == 0 && m % d != 0) emit(cyclotomic(d));
        }
    }

    // Norm_{K/Q}(z^v - w) for w in K \ Q, K = Q(i) or Q(zeta_3).
    // Irreducible over Q iff z^v - w is irreducible over K (gamma generates
    // K through w = gamma^v), so Capelli over K decides: q-th power tests
    // for q | v, plus the -4 condition, which over Q(i) collapses into the
    // square test and over Q(zeta_3) is checked as a 4th-power test.
    void quad_norm_piece(unsigned long v, const QuadElem& w) {
        if (w.rational()) throw std::logic_error("norm piece needs w outside Q");
        for (unsigned long q : divisors(v)) {
            if (q < 2) continue;
            bool isprime = true;
            for (unsigned long t = 2; t * t <= q; ++t)
                if (q % t == 0) {
                    isprime = false;
                    break;
                }
            if (!isprime) continue;
            auto s = quad_nth_root(w, q);
            if (!s) continue;
            if (q == 2) {
                step("norm-split", 2, Rat(0), v / 2);
                quad_norm_piece(v / 2, *s);
                quad_norm_piece(v / 2, -*s);
                return;
            }
            // odd-q split: one binomial-shaped norm piece plus a cofactor
            // over a larger cyclotomic field; the cofactor goes to the
            // general factorizer (unreachable in the tested ranges)
            step("norm-split", q, Rat(0), v / q);
            IntPoly whole = norm_poly(v, w);
            IntPoly part = norm_poly(v / q, *s);
            quad_norm_piece(v / q, *s);
            general_piece(exactnum::divexact(whole, part));
            return;
        }
        if (w.field == QuadField::Eisen && v % 4 == 0) {
            QuadElem m4{w.field, Rat(w.a) / -4, Rat(w.b) / -4};
            if (auto s = quad_nth_root(m4, 4)) {
                // Sophie-Germain split exists over Q(zeta_3); the halves
                // live over a biquadratic field
                general_piece(norm_poly(v, w));
                return;
            }
        }
        step("norm-leaf", 0, Rat(0), v);
        emit(norm_poly(v, w));
    }

    // scaled cyclotomic piece rho^phi(d) Phi_d(z^v / rho) for d >= 5
    void cyc_piece(unsigned long d, unsigned long v, const Rat& rho) {
        IntPoly phi = cyclotomic(d);
        unsigned long deg = static_cast<unsigned long>(phi.degree());
        std::vector<Rat> c(deg * v + 1, Rat(0));
        for (unsigned long j = 0; j <= deg; ++j) {
            if (phi[j] == 0) continue;
            Rat rp = Rat(1);
            for (unsigned long t = 0; t < deg - j; ++t) rp *= rho;
            c[j * v] = Rat(phi[j]) * rp;
        }
        Rat unit;
        IntPoly piece = exactnum::clear_denominators(c, &unit);
        if (v == 1) {
            // Q(rho * zeta_d) = Q(zeta_d): always irreducible
            step("cyclotomic-scaled-leaf", 0, rho, d);
            emit(piece);
            return;
        }
        // decidable split tests; fall back when a split exists or cannot
        // be excluded rationally
        bool maybe_split = false;
        if (d % 2 == 1) {
            for (unsigned long q : divisors(v)) {
                if (q < 2) continue;
                bool isprime = true;
                for (unsigned long t = 2; t * t <= q; ++t)
                    if (q % t == 0) isprime = false;
                if (!isprime) continue;
                if (q == 2) {
                    // zeta_d r in K_d^2 iff r in Q^2 or r/m in Q^2 for a
                    // quadratic subfield Q(sqrt m) of Q(zeta_d): d odd means
                    // m == 1 mod 4 and |m| | d
                    if (rat_nth_root(rho, 2)) maybe_split = true;
                    for (unsigned long m = 1; m <= d && !maybe_split; ++m) {
                        if (d % m != 0 || m == 1) continue;
                        for (int sg : {1, -1}) {
                            Int ms = sg * Int(m);
                            Int mod4 = ms % 4;
                            if (mod4 < 0) mod4 += 4;
                            if (mod4 != 1) continue;
                            if (rat_nth_root(rho / Rat(ms), 2)) maybe_split = true;
                        }
                    }
                } else if (d % q != 0) {
                    if (rat_nth_root(rho, q)) maybe_split = true;
                } else {
                    // q | d: necessary condition rho^phi(d) in +-Q^q
                    Rat rp(1);
                    for (unsigned long t = 0; t < deg; ++t) rp *= rho;
                    if (rat_nth_root(rp, q) || rat_nth_root(-rp, q)) maybe_split = true;
                }
            }
            if (v % 4 == 0) {
                Rat rp(1);
                for (unsigned long t = 0; t < deg; ++t) rp *= rho;
                Int f4;
                mpz_ui_pow_ui(f4.get_mpz_t(), 4, deg);
                if (rat_nth_root(rp / Rat(f4), 4) || rat_nth_root(-rp / Rat(f4), 4))
                    maybe_split = true;
            }
        } else {
            // even d >= 8: no rational exclusion implemented
            maybe_split = true;
        }
        if (maybe_split) {
            general_piece(piece);
        } else {
            step("cyclotomic-scaled-leaf", 0, rho, d);
            emit(piece);
        }
    }

    // z^m - b for rational b not 0
    void binomial_piece(unsigned long m, const Rat& b) {
        if (b == 1 || b == -1) {
            cyclotomic_piece(m, b == 1 ? 1 : -1);
            return;
        }
        if (m == 1) {
            step("binomial-leaf", 0, b, 1);
            emit(binomial_poly(1, b));
            return;
        }
        for (unsigned long p : divisors(m)) {
            if (p < 2) continue;
            bool isprime = true;
            for (unsigned long t = 2; t * t <= p; ++t)
                if (p % t == 0) {
                    isprime = false;
                    break;
                }
            if (!isprime) continue;
            auto r = rat_nth_root(b, p);
            if (!r) continue;
            if (p == 2) {
                step("power-split", 2, *r, m / 2);
                binomial_piece(m / 2, *r);
                binomial_piece(m / 2, Rat(-*r));
                return;
            }
            step("power-split", p, *r, m / p);
            binomial_piece(m / p, *r);
            if (p == 3) {
                QuadElem w{QuadField::Eisen, Rat(0), *r};  // r * zeta_3
                quad_norm_piece(m / 3, w);
            } else {
                cyc_piece(p, m / p, *r);
            }
            return;
        }
        if (m % 4 == 0) {
            if (auto c4 = rat_nth_root(-b / 4, 4)) {
                // z^4s + 4c^4 = (z^2s - 2cz^s + 2c^2)(z^2s + 2cz^s + 2c^2)
                step("sophie-germain", 0, *c4, m / 4);
                QuadElem w{QuadField::Gauss, *c4, *c4};  // c(1+i)
                quad_norm_piece(m / 4, w);
                quad_norm_piece(m / 4, -w);
                return;
            }
        }
        step("binomial-leaf", 0, b, m);
        emit(binomial_poly(m, b));
    }

    void run(unsigned long n, const Rat& beta) {
        if (beta == 1 || beta == -1) {
            cyclotomic_piece(n, beta == 1 ? 1 : -1);
            return;
        }
        auto [E, u] = exactnum::max_power_decomposition(beta);
        unsigned long g = std::gcd(n, E);
        unsigned long n1 = n / g, E1 = E / g;
        Rat r(1);
        for (unsigned long t = 0; t < E1; ++t) r *= u;
        for (unsigned long d : divisors(g)) {
            if (d == 1) {
                binomial_piece(n1, r);
            } else if (d == 2) {
                binomial_piece(n1, Rat(-r));
            } else if (d == 4) {
                binomial_piece(2 * n1, Rat(-r * r));
            } else if (d == 3) {
                quad_norm_piece(n1, QuadElem{QuadField::Eisen, Rat(0), r});
            } else if (d == 6) {
                // zeta_6 = 1 + zeta_3
                quad_norm_piece(n1, QuadElem{QuadField::Eisen, r, r});
            } else {
                cyc_piece(d, n1, r);
            }
        }
    }
};

}  // namespace

std::pair<Factorization, CapelliTrace> capelli_factor(unsigned long n, const Rat& beta) {
    if (n == 0) throw std::invalid_argument("capelli_factor needs n >= 1");
    if (beta == 0) throw std::invalid_argument("degenerate input: z^n alone");
    Engine eng;
    eng.run(n, beta);
    Factorization fac;
    fac.unit = Rat(1);
    std::sort(eng.factors.begin(), eng.factors.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    for (auto& f : eng.factors) {
        if (!fac.factors.empty() && fac.factors.back().poly == f)
            ++fac.factors.back().multiplicity;
        else
            fac.factors.push_back({f, 1});
    }
    return {std::move(fac), std::move(eng.trace)};
}

}  // namespace backorb::factor
