#include "backorb/exactnum/serialize.hpp"

#include <sstream>

namespace backorb::exactnum {

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

nlohmann::ordered_json poly_to_json(const IntPoly& f) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_string())
            c.emplace_back(e.get<std::string>());
        else if (e.is_number_integer())
            c.emplace_back(static_cast<long>(e.get<long long>()));
        else
            throw std::invalid_argument("polynomial coefficients must be strings or integers");
    }
    return IntPoly(std::move(c));
}

std::string poly_to_display(const IntPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        const Int& c = f[static_cast<size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool show_coeff = (a != 1) || i == 0;
        if (show_coeff) os << a.get_str();
        if (i > 0) {
            if (show_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace backorb::exactnum
