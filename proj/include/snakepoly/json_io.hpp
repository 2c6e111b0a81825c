#pragma once

#include <json.hpp>

#include "snakepoly/poly.hpp"

namespace snakepoly {

// Polynomial wire schema: {"vars":[...], "coeffs": ...} with integers as
// decimal strings. Univariate: flat list indexed by degree. Bivariate:
// matrix, row = degree in vars[0], column = degree in vars[1].
nlohmann::json poly_to_json(const Poly& p, const std::string& var = "t");
nlohmann::json poly2_to_json(const Poly2& p, const std::string& var1 = "t",
                             const std::string& var2 = "q");
Poly poly_from_json(const nlohmann::json& j);
Poly2 poly2_from_json(const nlohmann::json& j);

}  // namespace snakepoly
