#include "snakepoly/json_io.hpp"

#include <stdexcept>

namespace snakepoly {

using nlohmann::json;

json poly_to_json(const Poly& p, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return json{{"vars", json::array({var})}, {"coeffs", coeffs}};
}

json poly2_to_json(const Poly2& p, const std::string& var1, const std::string& var2) {
  json rows = json::array();
  for (int i = 0; i <= p.t_degree(); ++i) {
    json row = json::array();
    const Poly& r = p.t_coeff(static_cast<std::size_t>(i));
    for (int j = 0; j <= r.degree(); ++j) row.push_back(r.coeff(static_cast<std::size_t>(j)).str());
    rows.push_back(row);
  }
  return json{{"vars", json::array({var1, var2})}, {"coeffs", rows}};
}

Poly poly_from_json(const json& j) {
  if (!j.contains("coeffs")) throw std::invalid_argument("polynomial JSON: missing coeffs");
  std::vector<BigInt> c;
  for (const auto& e : j.at("coeffs")) c.emplace_back(e.get<std::string>());
  return Poly::from_coeffs(std::move(c));
}

Poly2 poly2_from_json(const json& j) {
  if (!j.contains("coeffs")) throw std::invalid_argument("polynomial JSON: missing coeffs");
  Poly2 out;
  std::size_t i = 0;
  for (const auto& row : j.at("coeffs")) {
    std::vector<BigInt> c;
    for (const auto& e : row) c.emplace_back(e.get<std::string>());
    out += Poly2::t_monomial(i, Poly::from_coeffs(std::move(c)));
    ++i;
  }
  return out;
}

}  // namespace snakepoly
