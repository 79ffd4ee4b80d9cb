#include "backorb/factor/mu.hpp"

#include <future>

namespace backorb::factor {

using dynamics::RationalMap;

long mu(const RationalMap& phi, const Rat& beta, unsigned long n, long degree_cap) {
    if (phi.is_power_map() && beta != 0) {
        long dn = 1;
        for (unsigned long i = 0; i < n; ++i) {
            if (dn > degree_cap / phi.degree()) throw dynamics::DegreeCapExceeded();
            dn *= phi.degree();
        }
        auto [fac, tr] = capelli_factor(static_cast<unsigned long>(dn), beta);
        return fac.factor_count_distinct();
    }
    auto fiber = iterate_poly(phi, n, beta, degree_cap);
    auto fac = factor_over_Q(fiber.poly);
    return fac.factor_count_distinct();
}

MuTable mu_table(const RationalMap& phi, const Rat& beta, unsigned long n_max, long degree_cap,
                 unsigned threads) {
    MuTable out{};
    out.rows.resize(n_max);
    if (threads <= 1) {
        for (unsigned long n = 1; n <= n_max; ++n) out.rows[n - 1] = {n, mu(phi, beta, n, degree_cap)};
    } else {
        std::vector<std::future<long>> futs(n_max);
        for (unsigned long n = 1; n <= n_max; ++n)
            futs[n - 1] = std::async(std::launch::async,
                                     [&, n] { return mu(phi, beta, n, degree_cap); });
        for (unsigned long n = 1; n <= n_max; ++n) out.rows[n - 1] = {n, futs[n - 1].get()};
    }
    out.nondecreasing = true;
    for (size_t i = 1; i < out.rows.size(); ++i)
        if (out.rows[i].mu < out.rows[i - 1].mu) out.nondecreasing = false;
    out.stabilizes_at = 0;
    if (!out.rows.empty()) {
        long last = out.rows.back().mu;
        unsigned long at = out.rows.back().n;
        for (size_t i = out.rows.size(); i-- > 0;) {
            if (out.rows[i].mu != last) break;
            at = out.rows[i].n;
        }
        out.stabilizes_at = at;
    }
    return out;
}

}  // namespace backorb::factor
