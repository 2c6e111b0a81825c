#pragma once

#include <vector>

#include "snakepoly/poly.hpp"

namespace snakepoly {

/// Truncated exponential generating function. Entry n stores n!*[z^n], a
/// Poly2, so the arithmetic stays in integer polynomials throughout; the
/// EGF product becomes a binomial convolution.
class EgfSeries {
 public:
  explicit EgfSeries(int order);
  static EgfSeries from_coeffs(std::vector<Poly2> coeffs);

  int order() const { return order_; }
  const Poly2& coeff(int n) const { return c_.at(static_cast<std::size_t>(n)); }
  void set_coeff(int n, Poly2 v) { c_.at(static_cast<std::size_t>(n)) = std::move(v); }

  EgfSeries operator+(const EgfSeries& o) const;
  EgfSeries operator-(const EgfSeries& o) const;
  EgfSeries operator*(const EgfSeries& o) const;
  bool operator==(const EgfSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

  /// g with f*g = 1 up to the truncation order; requires constant
  /// coefficient 1 (throws std::domain_error otherwise).
  EgfSeries reciprocal() const;
  /// d/dz: shifts coefficients down, order drops by one.
  EgfSeries derivative() const;
  EgfSeries pow(unsigned e) const;
  EgfSeries truncated(int new_order) const;

 private:
  int order_;
  std::vector<Poly2> c_;
};

}  // namespace snakepoly
