#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "snakepoly/bigint.hpp"

namespace snakepoly {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Canonical form: no trailing zero coefficient, the zero
/// polynomial is the empty coefficient list.
class Poly {
 public:
  Poly() = default;
  Poly(long v);  // NOLINT(google-explicit-constructor) constants read naturally
  explicit Poly(BigInt v);
  static Poly variable();
  static Poly monomial(std::size_t k, BigInt c = BigInt(1));
  static Poly from_coeffs(std::vector<BigInt> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const BigInt& s) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  BigInt eval(const BigInt& x) const;
  Poly derivative() const;
  /// p(-x); flips the sign of odd coefficients.
  Poly negate_variable() const;
  bool coeffs_nonnegative() const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// [n]_q = 1 + q + ... + q^{n-1} as a polynomial in q.
Poly q_integer(unsigned n);

/// Dense bivariate polynomial: row index = degree in the first variable
/// (t), each row a Poly in the second variable (q). Canonical form: no
/// trailing zero row.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(long v);  // NOLINT(google-explicit-constructor)
  explicit Poly2(BigInt v);
  static Poly2 t_monomial(std::size_t k, Poly qcoef = Poly(1));
  static Poly2 from_t_poly(const Poly& p);
  static Poly2 from_q_poly(const Poly& p);

  bool is_zero() const { return rows_.empty(); }
  int t_degree() const { return static_cast<int>(rows_.size()) - 1; }
  int q_degree() const;
  const Poly& t_coeff(std::size_t k) const;
  std::size_t row_count() const { return rows_.size(); }

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator-() const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const BigInt& s) const;
  Poly2 scale_q(const Poly& qpoly) const;
  Poly2 pow(unsigned e) const;
  bool operator==(const Poly2& o) const { return rows_ == o.rows_; }

  /// Jackson derivative: linear extension of t^n -> [n]_q t^{n-1}.
  Poly2 jackson_derivative() const;
  Poly at_q_one() const;
  Poly at_t_zero() const;
  Poly2 negate_t() const;
  BigInt eval(const BigInt& t, const BigInt& q) const;
  bool coeffs_nonnegative() const;

  std::string str(const std::string& tvar = "t", const std::string& qvar = "q") const;

 private:
  void trim();
  std::vector<Poly> rows_;
};

}  // namespace snakepoly
