#include "snakepoly/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace snakepoly {

Poly::Poly(long v) {
  if (v != 0) c_.push_back(BigInt(v));
}

Poly::Poly(BigInt v) {
  if (v != 0) c_.push_back(std::move(v));
}

Poly Poly::variable() { return monomial(1); }

Poly Poly::monomial(std::size_t k, BigInt c) {
  Poly p;
  if (c != 0) {
    p.c_.assign(k + 1, BigInt(0));
    p.c_[k] = std::move(c);
  }
  return p;
}

Poly Poly::from_coeffs(std::vector<BigInt> c) {
  Poly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator*(const BigInt& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

BigInt Poly::eval(const BigInt& x) const {
  BigInt r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigInt(i);
  r.trim();
  return r;
}

Poly Poly::negate_variable() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

bool Poly::coeffs_nonnegative() const {
  for (const auto& x : c_)
    if (x < 0) return false;
  return true;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    BigInt mag = a < 0 ? BigInt(-a) : a;
    if (i == 0 || mag != 1) os << mag.str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly q_integer(unsigned n) {
  std::vector<BigInt> c(n, BigInt(1));
  return Poly::from_coeffs(std::move(c));
}

Poly2::Poly2(long v) {
  if (v != 0) rows_.push_back(Poly(v));
}

Poly2::Poly2(BigInt v) {
  if (v != 0) rows_.push_back(Poly(std::move(v)));
}

Poly2 Poly2::t_monomial(std::size_t k, Poly qcoef) {
  Poly2 p;
  if (!qcoef.is_zero()) {
    p.rows_.assign(k + 1, Poly());
    p.rows_[k] = std::move(qcoef);
  }
  return p;
}

Poly2 Poly2::from_t_poly(const Poly& p) {
  Poly2 r;
  r.rows_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.rows_.push_back(Poly(c));
  r.trim();
  return r;
}

Poly2 Poly2::from_q_poly(const Poly& p) {
  Poly2 r;
  if (!p.is_zero()) r.rows_.push_back(p);
  return r;
}

void Poly2::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int Poly2::q_degree() const {
  int d = -1;
  for (const auto& row : rows_) d = std::max(d, row.degree());
  return d;
}

const Poly& Poly2::t_coeff(std::size_t k) const {
  static const Poly zero;
  return k < rows_.size() ? rows_[k] : zero;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
  trim();
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
  trim();
  return *this;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  r += o;
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 r = *this;
  r -= o;
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& row : r.rows_) row = -row;
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  if (is_zero() || o.is_zero()) return Poly2();
  Poly2 r;
  r.rows_.assign(rows_.size() + o.rows_.size() - 1, Poly());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < o.rows_.size(); ++j) r.rows_[i + j] += rows_[i] * o.rows_[j];
  r.trim();
  return r;
}

Poly2 Poly2::operator*(const BigInt& s) const {
  if (s == 0) return Poly2();
  Poly2 r = *this;
  for (auto& row : r.rows_) row = row * s;
  return r;
}

Poly2 Poly2::scale_q(const Poly& qpoly) const {
  if (qpoly.is_zero()) return Poly2();
  Poly2 r = *this;
  for (auto& row : r.rows_) row = row * qpoly;
  return r;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly2 Poly2::jackson_derivative() const {
  Poly2 r;
  if (rows_.size() <= 1) return r;
  r.rows_.assign(rows_.size() - 1, Poly());
  for (std::size_t k = 1; k < rows_.size(); ++k)
    r.rows_[k - 1] = rows_[k] * q_integer(static_cast<unsigned>(k));
  r.trim();
  return r;
}

Poly Poly2::at_q_one() const {
  std::vector<BigInt> c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i].eval(1);
  return Poly::from_coeffs(std::move(c));
}

Poly Poly2::at_t_zero() const { return t_coeff(0); }

Poly2 Poly2::negate_t() const {
  Poly2 r = *this;
  for (std::size_t i = 1; i < r.rows_.size(); i += 2) r.rows_[i] = -r.rows_[i];
  return r;
}

BigInt Poly2::eval(const BigInt& t, const BigInt& q) const {
  BigInt r = 0;
  for (std::size_t i = rows_.size(); i-- > 0;) r = r * t + rows_[i].eval(q);
  return r;
}

bool Poly2::coeffs_nonnegative() const {
  for (const auto& row : rows_)
    if (!row.coeffs_nonnegative()) return false;
  return true;
}

std::string Poly2::str(const std::string& tvar, const std::string& qvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].is_zero()) continue;
    if (!first) os << " + ";
    bool paren = rows_[i].coeffs().size() > 1 ||
                 (i >= 1 && !(rows_[i] == Poly(1)));
    if (i == 0) {
      os << rows_[i].str(qvar);
    } else {
      if (paren && rows_[i].coeffs().size() > 1) os << "(" << rows_[i].str(qvar) << ")";
      else if (!(rows_[i] == Poly(1))) os << rows_[i].str(qvar);
      os << tvar;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace snakepoly
