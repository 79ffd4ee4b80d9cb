#include "backorb/exactnum/newton_polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace backorb::exactnum {

NewtonPolygon newton_polygon(const IntPoly& f, const Int& p) {
    if (f.is_zero()) throw std::invalid_argument("newton polygon of zero polynomial");
    NewtonPolygon np;
    size_t k0 = 0;
    while (f[k0] == 0) ++k0;
    np.vanishing_order = static_cast<long>(k0);
    if (k0 == f.coeffs().size() - 1) return np;  // constant after stripping

    // points (i, v_p(c_i)) for nonzero c_i, i >= k0
    std::vector<std::pair<long, long>> pts;
    for (size_t i = k0; i < f.coeffs().size(); ++i) {
        if (f[i] == 0) continue;
        pts.emplace_back(static_cast<long>(i), valuation(f[i], p));
    }
    // lower convex hull, left to right (x strictly increasing already)
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep b only if it is strictly below segment a->pt
            long long cross = static_cast<long long>(b.first - a.first) * (pt.second - a.second) -
                              static_cast<long long>(pt.first - a.first) * (b.second - a.second);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        long dx = hull[i + 1].first - hull[i].first;
        long dy = hull[i + 1].second - hull[i].second;
        np.segments.push_back({make_rat(Int(-dy), Int(dx)), static_cast<unsigned long>(dx)});
    }
    // hull slopes increase, so root valuations decrease; report ascending
    std::reverse(np.segments.begin(), np.segments.end());
    return np;
}

std::vector<Rat> root_valuations(const IntPoly& f, const Int& p) {
    auto np = newton_polygon(f, p);
    std::vector<Rat> out;
    for (const auto& s : np.segments)
        for (unsigned long i = 0; i < s.multiplicity; ++i) out.push_back(s.valuation);
    return out;
}

}  // namespace backorb::exactnum
