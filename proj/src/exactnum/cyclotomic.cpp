#include "backorb/exactnum/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace backorb::exactnum {

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntPoly cyclotomic(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic index must be positive");
    // z^m - 1 divided by the product of the proper cyclotomic divisors
    std::vector<Int> c(m + 1, Int(0));
    c[0] = -1;
    c[m] = 1;
    IntPoly f(std::move(c));
    for (unsigned long d : divisors(m)) {
        if (d == m) continue;
        f = divexact(f, cyclotomic(d));
    }
    return f;
}

}  // namespace backorb::exactnum
