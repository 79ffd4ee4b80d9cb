#pragma once

#include <map>
#include <string>

#include "backorb/dynamics/map.hpp"

namespace backorb::cli {

// "z^2 - 1", "3z^2+2", "(z^2+1)/z": integer-coefficient polynomial
// expressions in z, optionally a quotient split at a top-level slash.
IntPoly parse_poly(const std::string& text);
dynamics::RationalMap parse_map(const std::string& text);

// "3/8", "-4", "inf"
dynamics::ProjPoint parse_point(const std::string& text);
Rat parse_rat(const std::string& text);

// key = value lines, '#' comments
struct Config {
    long degree_cap = dynamics::kDefaultDegreeCap;
    double tol = 1e-12;
    unsigned threads = 1;
    unsigned long seed = 20260810;
};
Config load_config(const std::string& path);

}  // namespace backorb::cli
