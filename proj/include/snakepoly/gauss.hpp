#pragma once

#include <map>
#include <string>
#include <vector>

#include "snakepoly/bigint.hpp"
#include "snakepoly/poly.hpp"

namespace snakepoly {

struct GaussInt {
  BigInt re = 0;
  BigInt im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussInt& o) const = default;
};

/// Laurent polynomial in s with Gaussian-integer coefficients. The ring
/// hosts sqrt(q) exactly through the identification q = s^2, so i*q^{a/2}
/// is the monomial i*s^a. No zero-valued entries are stored.
class GaussLaurent {
 public:
  GaussLaurent() = default;
  GaussLaurent(long v);  // NOLINT(google-explicit-constructor)
  static GaussLaurent term(int exp, GaussInt c);
  /// q^k = s^{2k}.
  static GaussLaurent q_power(unsigned k);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, GaussInt>& terms() const { return terms_; }
  GaussInt coeff(int exp) const;

  GaussLaurent& operator+=(const GaussLaurent& o);
  GaussLaurent& operator-=(const GaussLaurent& o);
  GaussLaurent operator+(const GaussLaurent& o) const;
  GaussLaurent operator-(const GaussLaurent& o) const;
  GaussLaurent operator-() const;
  GaussLaurent operator*(const GaussLaurent& o) const;
  bool operator==(const GaussLaurent& o) const { return terms_ == o.terms_; }

  bool is_monomial_unit() const;
  /// Inverse of a monomial c*s^k with c a Gaussian unit.
  GaussLaurent monomial_inverse() const;

  std::string str() const;

 private:
  void insert(int exp, const GaussInt& c);
  std::map<int, GaussInt> terms_;
};

/// Polynomial in t with GaussLaurent coefficients: the ring
/// GaussLaurent (x) PolyT in which the continuous dual q-Hahn moments are
/// computed.
class GLPoly {
 public:
  GLPoly() = default;
  GLPoly(long v);  // NOLINT(google-explicit-constructor)
  static GLPoly from_gl(GaussLaurent g);
  static GLPoly t_monomial(std::size_t k, GaussLaurent c);
  /// Embeds a Poly2 via q -> s^2.
  static GLPoly from_poly2(const Poly2& p);

  bool is_zero() const { return c_.empty(); }
  int t_degree() const { return static_cast<int>(c_.size()) - 1; }
  const GaussLaurent& t_coeff(std::size_t k) const;

  GLPoly& operator+=(const GLPoly& o);
  GLPoly& operator-=(const GLPoly& o);
  GLPoly operator+(const GLPoly& o) const;
  GLPoly operator-(const GLPoly& o) const;
  GLPoly operator-() const;
  GLPoly operator*(const GLPoly& o) const;
  bool operator==(const GLPoly& o) const { return c_ == o.c_; }

  /// Exact quotient by (1-q)^n = (1-s^2)^n; throws std::domain_error if the
  /// element is not divisible.
  GLPoly divide_one_minus_q(unsigned n) const;
  /// Converts back to a Poly2 via s^2 -> q; throws std::domain_error if any
  /// coefficient has an odd or negative s-exponent or an imaginary part.
  Poly2 to_poly2() const;

  std::string str() const;

 private:
  void trim();
  std::vector<GaussLaurent> c_;
};

}  // namespace snakepoly
