#include "backorb/heights/height.hpp"

#include <cmath>
#include <stdexcept>

namespace backorb::heights {

using dynamics::ProjPoint;
using dynamics::RationalMap;

double log_int(const Int& n) {
    if (n == 0) throw std::invalid_argument("log of zero");
    signed long exp;
    double m = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp) * std::log(2.0);
}

HeightValue height_point(const ProjPoint& P) {
    Int m = std::max(Int(abs(P.x())), Int(abs(P.y())));
    return {log_int(m), 0.0};
}

namespace {

Int one_norm(const std::vector<Int>& c) {
    Int s(0);
    for (const auto& a : c) s += abs(a);
    return s;
}

// Solve A F + B G = X^(2d-1) (side = 0) or Y^(2d-1) (side = 1) with
// deg A = deg B = d - 1 over Q by Gaussian elimination, clear denominators,
// and return the 1-norm sum of the integer cofactors.
Int cofactor_norm(const RationalMap& phi, int side) {
    long d = phi.degree();
    size_t n = static_cast<size_t>(2 * d);
    // unknowns: a_0..a_{d-1}, b_0..b_{d-1} (coefficients of A and B in X,
    // homogeneous degree d-1); equations: coefficient of X^k Y^(2d-1-k)
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1, Rat(0)));
    for (long i = 0; i < d; ++i) {      // a_i multiplies X^i Y^(d-1-i)
        for (long j = 0; j <= d; ++j) {  // F_j X^j Y^(d-j)
            M[static_cast<size_t>(i + j)][static_cast<size_t>(i)] += Rat(phi.F()[static_cast<size_t>(j)]);
            M[static_cast<size_t>(i + j)][static_cast<size_t>(d + i)] += Rat(phi.G()[static_cast<size_t>(j)]);
        }
    }
    size_t target = side == 0 ? n - 1 : 0;
    for (size_t i = 0; i < n; ++i) M[i][n] = (i == target) ? Rat(1) : Rat(0);
    // elimination
    for (size_t col = 0, row = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(M[row], M[piv]);
        Rat p = M[row][col];
        for (size_t j = col; j <= n; ++j) M[row][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || M[i][col] == 0) continue;
            Rat f = M[i][col];
            for (size_t j = col; j <= n; ++j) M[i][j] -= f * M[row][j];
        }
        ++row;
    }
    std::vector<Rat> sol(n, Rat(0));
    // after full reduction the matrix is the identity on the pivot columns
    for (size_t i = 0; i < n; ++i) {
        size_t lead = n;
        for (size_t j = 0; j < n; ++j)
            if (M[i][j] != 0) {
                lead = j;
                break;
            }
        if (lead < n) sol[lead] = M[i][n];
    }
    Int den(1);
    for (const auto& q : sol) den = lcm(den, Int(q.get_den()));
    Int total(0);
    for (const auto& q : sol) {
        Rat t = q * Rat(den);
        total += abs(Int(t.get_num()));
    }
    // the identity is D X^(2d-1) = A' F + B' G with D = den
    // and the bound constant is (sum of |A'|,|B'| 1-norms) / D
    // round the quotient up to stay sound
    Int qceil = (total + den - 1) / den;
    return qceil;
}

}  // namespace

double height_commute_bound(const RationalMap& phi) {
    Int up = std::max(one_norm(phi.F()), one_norm(phi.G()));
    Int k1 = cofactor_norm(phi, 0);
    Int k2 = cofactor_norm(phi, 1);
    Int low = std::max(k1, k2);
    Int worst = std::max(up, low);
    if (worst <= 1) return 0.0;
    // tiny upward slack keeps the bound sound under double rounding
    return log_int(worst) + 1e-9;
}

HeightValue canonical_height(const RationalMap& phi, const ProjPoint& beta, double target_err,
                             long iter_cap) {
    if (target_err <= 0) throw std::invalid_argument("target_err must be positive");
    double C = height_commute_bound(phi);
    long d = phi.degree();
    ProjPoint P = beta;
    double dn = 1.0;
    unsigned long n = 0;
    long formal = 1;
    while (C / (dn * (d - 1)) > target_err) {
        if (formal > iter_cap / d) throw dynamics::DegreeCapExceeded();
        formal *= d;
        P = evaluate(phi, P);
        dn *= d;
        ++n;
    }
    double h = height_point(P).value / dn;
    double err = C == 0.0 ? 0.0 : C / (dn * (d - 1));
    return {h, err};
}

}  // namespace backorb::heights
