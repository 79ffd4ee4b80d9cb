#pragma once

#include <string>

#include <json.hpp>

#include "backorb/exactnum/poly.hpp"

namespace backorb::exactnum {

// Wire formats: polynomials are JSON arrays of decimal coefficient strings
// in ascending degree; rationals are "num/den" strings (den omitted when 1).

std::string rat_to_string(const Rat& q);
nlohmann::ordered_json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const nlohmann::json& j);

// Human-readable rendering like "z^4 - 4*z^2 + 2".
std::string poly_to_display(const IntPoly& f, const std::string& var = "z");

}  // namespace backorb::exactnum
