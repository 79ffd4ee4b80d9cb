#include "backorb/integrality/chordal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "backorb/heights/height.hpp"

namespace backorb::integrality {

using dynamics::ProjPoint;

PlaceSet PlaceSet::parse(const std::string& csv) {
    std::set<Int> primes;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim
        size_t b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = tok.find_last_not_of(" \t");
        std::string t = tok.substr(b, e - b + 1);
        if (t == "inf" || t == "oo" || t.empty()) continue;  // always present
        Int p(t);
        if (p < 2 || !exactnum::is_probable_prime(p))
            throw std::invalid_argument("not a prime: " + t);
        primes.insert(p);
    }
    return PlaceSet(std::move(primes));
}

std::string PlaceSet::to_string() const {
    std::string out = "{inf";
    for (const auto& p : primes_) out += "," + p.get_str();
    return out + "}";
}

ChordalValue chordal(const ProjPoint& P, const ProjPoint& Q, const Place& v) {
    Int cross = P.x() * Q.y() - P.y() * Q.x();
    ChordalValue out;
    out.place = v;
    if (v.archimedean) {
        double num = std::fabs(cross.get_d());
        double m1 = std::max(Int(abs(P.x())), Int(abs(P.y()))).get_d();
        double m2 = std::max(Int(abs(Q.x())), Int(abs(Q.y()))).get_d();
        out.numeric = num / (m1 * m2);
        return out;
    }
    if (cross == 0) {
        out.cross_valuation = 0;
        out.numeric = 0.0;  // identical points are at distance 0
        return out;
    }
    // coordinates are coprime integers, so both max terms are p-adic units
    out.cross_valuation = exactnum::valuation(cross, v.p);
    out.numeric = std::pow(v.p.get_d(), -static_cast<double>(out.cross_valuation));
    return out;
}

LocalHeight local_height(const ProjPoint& P, const ProjPoint& Q, const Place& v) {
    if (P == Q) throw std::domain_error("local height is infinite on the diagonal");
    auto d = chordal(P, Q, v);
    LocalHeight out;
    out.place = v;
    if (v.archimedean) {
        out.numeric = -std::log(d.numeric);
        return out;
    }
    out.valuation = d.cross_valuation;
    out.numeric = static_cast<double>(out.valuation) * std::log(v.p.get_d());
    return out;
}

}  // namespace backorb::integrality
