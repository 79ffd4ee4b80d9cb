#include "backorb/heights/mahler.hpp"

#include <algorithm>
#include <cmath>

namespace backorb::heights {

using std::complex;

namespace {

complex<double> horner(const std::vector<double>& c, complex<double> z) {
    complex<double> r(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
}

}  // namespace

RootEstimates complex_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of zero polynomial");
    long n = f.degree();
    RootEstimates out;
    if (n == 0) return out;

    std::vector<double> c(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = f[static_cast<size_t>(i)].get_d();
    std::vector<double> dc(static_cast<size_t>(n));
    for (long i = 1; i <= n; ++i) dc[static_cast<size_t>(i - 1)] = c[static_cast<size_t>(i)] * i;

    // strip roots at zero exactly
    size_t zeros = 0;
    while (zeros < c.size() && f[zeros] == 0) ++zeros;
    // Cauchy-style initial radius
    double lead = std::fabs(c.back());
    double radius = 0.0;
    for (size_t i = 0; i + 1 < c.size(); ++i)
        radius = std::max(radius, std::pow(std::fabs(c[i]) / lead, 1.0 / (c.size() - 1 - i)));
    radius = 1.0 + radius;

    std::vector<complex<double>> z(static_cast<size_t>(n));
    const double pi = 3.141592653589793238462643383279502884;
    for (long i = 0; i < n; ++i) {
        double ang = 2.0 * pi * i / n + 0.39;
        double r = radius * (0.6 + 0.4 * (i % 7) / 7.0);
        z[static_cast<size_t>(i)] = complex<double>(r * std::cos(ang), r * std::sin(ang));
    }
    if (zeros > 0)
        for (size_t i = 0; i < zeros; ++i) z[i] = complex<double>(0.0, 0.0);

    const int max_sweeps = 400;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (long i = 0; i < n; ++i) {
            complex<double>& zi = z[static_cast<size_t>(i)];
            if (zeros > 0 && static_cast<size_t>(i) < zeros) continue;  // exact
            complex<double> fv = horner(c, zi);
            complex<double> dv = horner(dc, zi);
            if (std::abs(fv) == 0.0) continue;
            complex<double> newton = (std::abs(dv) > 0.0) ? fv / dv : complex<double>(1e-3, 1e-3);
            complex<double> sum(0.0, 0.0);
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                complex<double> diff = zi - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = complex<double>(1e-12, 1e-12);
                sum += 1.0 / diff;
            }
            complex<double> denom = 1.0 - newton * sum;
            complex<double> corr = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            zi -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(zi)));
        }
        if (worst < 1e-14) break;
    }

    out.roots = z;
    out.radii.resize(static_cast<size_t>(n), 0.0);
    for (long i = 0; i < n; ++i) {
        if (zeros > 0 && static_cast<size_t>(i) < zeros) continue;
        complex<double> fv = horner(c, z[static_cast<size_t>(i)]);
        complex<double> dv = horner(dc, z[static_cast<size_t>(i)]);
        double r = (std::abs(dv) > 0.0) ? n * std::abs(fv) / std::abs(dv) : 1.0;
        out.radii[static_cast<size_t>(i)] = r;
    }
    return out;
}

HeightValue log_mahler_measure(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("Mahler measure of zero");
    if (f.degree() == 0) return {log_int(f.leading()), 0.0};
    double value = log_int(f.leading());
    double err = 0.0;
    // weight squarefree parts by multiplicity so repeated roots do not
    // degrade the Aberth iteration
    for (auto& [part, mult] : exactnum::squarefree_decomposition(f)) {
        if (part.degree() < 1) continue;
        auto est = complex_roots(part);
        double acc = 0.0, eacc = 0.0;
        for (size_t i = 0; i < est.roots.size(); ++i) {
            double a = std::abs(est.roots[i]);
            double r = est.radii[i];
            acc += std::log(std::max(1.0, a));
            double lo = std::max(1.0, a - r), hi = std::max(1.0, a + r);
            eacc += std::log(hi) - std::log(lo);
        }
        value += mult * acc;
        err += mult * eacc;
    }
    return {value, err + 1e-13};
}

HeightValue height_class(const integrality::ConjugateClass& gamma, double tol) {
    if (gamma.is_rational()) {
        Rat v = gamma.rational_value();
        Int m = std::max(Int(abs(Int(v.get_num()))), Int(v.get_den()));
        return {log_int(m), 0.0};
    }
    auto lm = log_mahler_measure(gamma.minpoly());
    double deg = static_cast<double>(gamma.degree());
    HeightValue h{lm.value / deg, lm.error_bound / deg};
    if (h.error_bound > tol) throw RootFinderDidNotConverge(h.error_bound);
    return h;
}

double lehmer_ratio(const integrality::ConjugateClass& gamma, const dynamics::RationalMap& phi,
                    double tol) {
    if (!phi.is_power_map())
        throw std::invalid_argument(
            "lehmer_ratio needs the power map z^d, where the canonical height is the absolute "
            "height; iterating algebraic points under other maps is out of scope");
    auto h = height_class(gamma, tol);
    return static_cast<double>(gamma.degree()) * h.value;
}

}  // namespace backorb::heights
