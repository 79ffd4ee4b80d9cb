#include "backorb/dynamics/chebyshev.hpp"

#include <stdexcept>

namespace backorb::dynamics {

IntPoly chebyshev(long d) {
    if (d < 2) throw std::invalid_argument("chebyshev needs d >= 2");
    // T_0 = 2, T_1 = z, T_{k+1} = z T_k - T_{k-1}
    IntPoly prev = IntPoly::constant(2);
    IntPoly cur({Int(0), Int(1)});
    IntPoly zpoly = cur;
    for (long k = 1; k < d; ++k) {
        IntPoly next = exactnum::sub(exactnum::mul(zpoly, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    // postcondition: T_d(w + 1/w) = w^d + w^{-d} as a Laurent identity,
    // checked as T~_d(w^2 + 1, w) == w^{2d} + 1 after homogenization
    IntPoly warg({Int(1), Int(0), Int(1)});  // w^2 + 1
    IntPoly acc;
    std::vector<IntPoly> pw(static_cast<size_t>(d) + 1);
    pw[0] = IntPoly::constant(1);
    for (long j = 1; j <= d; ++j) pw[static_cast<size_t>(j)] = exactnum::mul(pw[static_cast<size_t>(j - 1)], warg);
    for (long j = 0; j <= d; ++j) {
        const Int& c = cur.coeff(static_cast<size_t>(j));
        if (c == 0) continue;
        // c * (w^2+1)^j * w^(d-j)
        IntPoly term = exactnum::mul_scalar(pw[static_cast<size_t>(j)], c);
        acc = exactnum::add(acc, exactnum::mul(term, IntPoly::monomial(Int(1), static_cast<size_t>(d - j))));
    }
    std::vector<Int> expect(static_cast<size_t>(2 * d) + 1, Int(0));
    expect[0] = 1;
    expect[static_cast<size_t>(2 * d)] = 1;
    if (!(acc == IntPoly(std::move(expect))))
        throw std::logic_error("chebyshev commutation identity failed");
    return cur;
}

}  // namespace backorb::dynamics
