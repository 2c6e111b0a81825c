#include "snakepoly/gauss.hpp"

#include <sstream>
#include <stdexcept>

namespace snakepoly {

GaussLaurent::GaussLaurent(long v) {
  if (v != 0) terms_[0] = GaussInt{BigInt(v), BigInt(0)};
}

GaussLaurent GaussLaurent::term(int exp, GaussInt c) {
  GaussLaurent g;
  if (!c.is_zero()) g.terms_[exp] = std::move(c);
  return g;
}

GaussLaurent GaussLaurent::q_power(unsigned k) {
  return term(static_cast<int>(2 * k), GaussInt{BigInt(1), BigInt(0)});
}

GaussInt GaussLaurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? GaussInt{} : it->second;
}

void GaussLaurent::insert(int exp, const GaussInt& c) {
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_[exp] = c;
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

GaussLaurent& GaussLaurent::operator+=(const GaussLaurent& o) {
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

GaussLaurent& GaussLaurent::operator-=(const GaussLaurent& o) {
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

GaussLaurent GaussLaurent::operator+(const GaussLaurent& o) const {
  GaussLaurent r = *this;
  r += o;
  return r;
}

GaussLaurent GaussLaurent::operator-(const GaussLaurent& o) const {
  GaussLaurent r = *this;
  r -= o;
  return r;
}

GaussLaurent GaussLaurent::operator-() const {
  GaussLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

GaussLaurent GaussLaurent::operator*(const GaussLaurent& o) const {
  GaussLaurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.insert(e1 + e2, c1 * c2);
  return r;
}

bool GaussLaurent::is_monomial_unit() const {
  if (terms_.size() != 1) return false;
  const GaussInt& c = terms_.begin()->second;
  BigInt norm = c.re * c.re + c.im * c.im;
  return norm == 1;
}

GaussLaurent GaussLaurent::monomial_inverse() const {
  if (!is_monomial_unit()) throw std::domain_error("GaussLaurent: not an invertible monomial");
  int exp = terms_.begin()->first;
  const GaussInt& c = terms_.begin()->second;
  // conjugate of a unit is its inverse
  return term(-exp, GaussInt{c.re, -c.im});
}

std::string GaussLaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.re.str() << (c.im >= 0 ? "+" : "") << c.im.str() << "i)";
    if (e != 0) os << "s^" << e;
    first = false;
  }
  return os.str();
}

GLPoly::GLPoly(long v) {
  if (v != 0) c_.push_back(GaussLaurent(v));
}

GLPoly GLPoly::from_gl(GaussLaurent g) {
  GLPoly p;
  if (!g.is_zero()) p.c_.push_back(std::move(g));
  return p;
}

GLPoly GLPoly::t_monomial(std::size_t k, GaussLaurent c) {
  GLPoly p;
  if (!c.is_zero()) {
    p.c_.assign(k + 1, GaussLaurent());
    p.c_[k] = std::move(c);
  }
  return p;
}

GLPoly GLPoly::from_poly2(const Poly2& p) {
  GLPoly r;
  for (int i = 0; i <= p.t_degree(); ++i) {
    const Poly& row = p.t_coeff(static_cast<std::size_t>(i));
    GaussLaurent g;
    for (int j = 0; j <= row.degree(); ++j)
      g += GaussLaurent::term(2 * j, GaussInt{row.coeff(static_cast<std::size_t>(j)), BigInt(0)});
    r += t_monomial(static_cast<std::size_t>(i), g.is_zero() ? GaussLaurent() : g);
  }
  return r;
}

const GaussLaurent& GLPoly::t_coeff(std::size_t k) const {
  static const GaussLaurent zero;
  return k < c_.size() ? c_[k] : zero;
}

void GLPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GLPoly& GLPoly::operator+=(const GLPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

GLPoly& GLPoly::operator-=(const GLPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

GLPoly GLPoly::operator+(const GLPoly& o) const {
  GLPoly r = *this;
  r += o;
  return r;
}

GLPoly GLPoly::operator-(const GLPoly& o) const {
  GLPoly r = *this;
  r -= o;
  return r;
}

GLPoly GLPoly::operator-() const {
  GLPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

GLPoly GLPoly::operator*(const GLPoly& o) const {
  if (is_zero() || o.is_zero()) return GLPoly();
  GLPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, GaussLaurent());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

namespace {
// g / (1-s^2), exact; throws on remainder.
GaussLaurent divide_gl_once(const GaussLaurent& g) {
  if (g.is_zero()) return g;
  int lo = g.terms().begin()->first;
  int hi = g.terms().rbegin()->first;
  // H with g = (1-s^2) H: coefficients satisfy g_k = H_k - H_{k-2}.
  std::map<int, GaussInt> h;
  GaussInt carry_even, carry_odd;  // H_{k-2} per parity chain
  GaussInt* carries[2] = {&carry_even, &carry_odd};
  for (int k = lo; k <= hi + 2; ++k) {
    GaussInt& carry = *carries[((k % 2) + 2) % 2];
    GaussInt hk = g.coeff(k) + carry;
    if (k > hi) {
      if (!hk.is_zero()) throw std::domain_error("GLPoly: not divisible by (1-q)");
    } else if (!hk.is_zero()) {
      h[k] = hk;
    }
    carry = hk;
  }
  GaussLaurent r;
  for (const auto& [e, c] : h) r += GaussLaurent::term(e, c);
  return r;
}
}  // namespace

GLPoly GLPoly::divide_one_minus_q(unsigned n) const {
  GLPoly r = *this;
  for (unsigned i = 0; i < n; ++i)
    for (auto& coeff : r.c_) coeff = divide_gl_once(coeff);
  r.trim();
  return r;
}

Poly2 GLPoly::to_poly2() const {
  Poly2 out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::vector<BigInt> qc;
    for (const auto& [e, g] : c_[i].terms()) {
      if (e < 0 || e % 2 != 0 || g.im != 0)
        throw std::domain_error("GLPoly: value is not in the image of PolyTQ");
      std::size_t j = static_cast<std::size_t>(e / 2);
      if (qc.size() <= j) qc.resize(j + 1);
      qc[j] = g.re;
    }
    out += Poly2::t_monomial(i, Poly::from_coeffs(std::move(qc)));
  }
  return out;
}

std::string GLPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (i > 0) os << " + ";
    os << "[" << c_[i].str() << "]";
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace snakepoly
