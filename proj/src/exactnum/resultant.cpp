#include "backorb/exactnum/resultant.hpp"

#include <stdexcept>

#include "backorb/kernels/modpoly.hpp"

namespace backorb::exactnum {

namespace {

// Fraction-free determinant (Bareiss) of a square integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return Int(0);
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

std::vector<std::vector<Int>> sylvester(const std::vector<Int>& fdesc, long df,
                                        const std::vector<Int>& gdesc, long dg) {
    // f's rows on top: dg rows of f, df rows of g
    size_t n = static_cast<size_t>(df + dg);
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (long i = 0; i < dg; ++i)
        for (long j = 0; j <= df; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = fdesc[static_cast<size_t>(j)];
    for (long i = 0; i < df; ++i)
        for (long j = 0; j <= dg; ++j)
            m[static_cast<size_t>(dg + i)][static_cast<size_t>(i + j)] = gdesc[static_cast<size_t>(j)];
    return m;
}

std::vector<Int> descending(const IntPoly& f) {
    return {f.coeffs().rbegin(), f.coeffs().rend()};
}

Int l2norm_squared(const IntPoly& f) {
    Int s(0);
    for (const auto& c : f.coeffs()) s += c * c;
    return s;
}

}  // namespace

Int resultant_prs(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    if (f.degree() == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(g.degree()));
        return r;
    }
    if (g.degree() == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(f.degree()));
        return r;
    }
    return bareiss_det(sylvester(descending(f), f.degree(), descending(g), g.degree()));
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    long df = f.degree(), dg = g.degree();
    if (dg == 1 && df > 1) {
        // Res(f, g1 z + g0) = (-1)^df g1^df f(-g0/g1)
        Int v = eval_homogeneous(f, Int(-g[0]), g[1]);
        return (df % 2 == 1) ? Int(-v) : v;
    }
    if (df == 1 && dg > 1) {
        // Res(f, g) = (-1)^(df dg) Res(g, f) and the two signs cancel
        return eval_homogeneous(g, Int(-f[0]), f[1]);
    }
    if (df == 0 || dg == 0 || df + dg <= 12) return resultant_prs(f, g);

    // Hadamard bound: |Res| <= ||f||_2^dg * ||g||_2^df
    Int b2f = l2norm_squared(f), b2g = l2norm_squared(g);
    Int bound2(1), t;
    mpz_pow_ui(t.get_mpz_t(), b2f.get_mpz_t(), static_cast<unsigned long>(dg));
    bound2 *= t;
    mpz_pow_ui(t.get_mpz_t(), b2g.get_mpz_t(), static_cast<unsigned long>(df));
    bound2 *= t;
    Int bound = sqrt(bound2) + 1;

    Int target = 2 * bound + 1;
    Int modulus(1), value(0);
    Int p(1u << 30);
    while (modulus < target) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) continue;
        if (mpz_divisible_p(g.leading().get_mpz_t(), p.get_mpz_t())) continue;
        uint32_t pu = static_cast<uint32_t>(p.get_ui());
        auto fp = kernels::ModPoly::from_int_poly(f, pu);
        auto gp = kernels::ModPoly::from_int_poly(g, pu);
        uint32_t rp = kernels::mp_resultant(fp, gp);
        // CRT merge
        Int diff = (Int(rp) - value) % p;
        if (diff < 0) diff += p;
        Int minv;
        if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::logic_error("CRT moduli not coprime");
        Int step = (diff * minv) % p;
        value += modulus * step;
        modulus *= p;
    }
    if (value * 2 > modulus) value -= modulus;
    return value;
}

Int resultant_forms(const std::vector<Int>& F, const std::vector<Int>& G, long d) {
    if (static_cast<long>(F.size()) != d + 1 || static_cast<long>(G.size()) != d + 1)
        throw std::invalid_argument("form coefficient vectors must have length d+1");
    // Coefficients arrive as c[i] X^i Y^(d-i); the Sylvester convention wants
    // descending powers of X.
    std::vector<Int> fdesc(F.rbegin(), F.rend());
    std::vector<Int> gdesc(G.rbegin(), G.rend());
    return bareiss_det(sylvester(fdesc, d, gdesc, d));
}

IntPoly taylor_shift_rat(const IntPoly& A, const Int& a, const Int& b) {
    if (A.is_zero()) return A;
    long m = A.degree();
    IntPoly lin({a, b});
    IntPoly r = IntPoly::constant(A[static_cast<size_t>(m)]);
    Int bp(1);
    for (long k = m - 1; k >= 0; --k) {
        bp *= b;
        r = add(mul(r, lin), IntPoly::constant(A[static_cast<size_t>(k)] * bp));
    }
    return r;
}

IntPoly difference_resultant(const IntPoly& A, const IntPoly& B) {
    if (A.is_zero() || B.is_zero()) throw std::invalid_argument("difference resultant of zero");
    long n = A.degree() * B.degree();
    if (n == 0) {
        return IntPoly::constant(resultant(B, A));
    }
    // Evaluate R(w) = Res_z(B(z), A(z+w)) at w = 0..n and interpolate by
    // Newton divided differences; the result is known to be integral.
    std::vector<Rat> xs, ys;
    xs.reserve(static_cast<size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) {
        IntPoly Aj = taylor_shift(A, Int(j));
        xs.emplace_back(Int(j));
        ys.emplace_back(resultant(B, Aj));
    }
    size_t npts = xs.size();
    // divided difference coefficients in place
    std::vector<Rat> dd = ys;
    for (size_t k = 1; k < npts; ++k)
        for (size_t i = npts - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
            if (i == k) break;
        }
    // expand Newton form
    std::vector<Rat> poly{dd[npts - 1]};
    for (size_t i = npts - 1; i-- > 0;) {
        // poly = poly*(w - x_i) + dd[i]
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * xs[i];
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    std::vector<Int> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].get_den() != 1) throw std::logic_error("difference resultant not integral");
        out[i] = Int(poly[i].get_num());
    }
    return IntPoly(std::move(out));
}

Int discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    if (f.degree() == 1) return Int(1);
    Int res = resultant(f, derivative(f));
    Int d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    long n = f.degree();
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

}  // namespace backorb::exactnum
