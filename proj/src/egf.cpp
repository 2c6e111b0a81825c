#include "snakepoly/egf.hpp"

#include <stdexcept>

namespace snakepoly {

EgfSeries::EgfSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("EgfSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, Poly2());
}

EgfSeries EgfSeries::from_coeffs(std::vector<Poly2> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("EgfSeries: empty coefficient list");
  EgfSeries s(static_cast<int>(coeffs.size()) - 1);
  s.c_ = std::move(coeffs);
  return s;
}

EgfSeries EgfSeries::operator+(const EgfSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("EgfSeries: order mismatch");
  EgfSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n] + o.c_[n];
  return r;
}

EgfSeries EgfSeries::operator-(const EgfSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("EgfSeries: order mismatch");
  EgfSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n] - o.c_[n];
  return r;
}

EgfSeries EgfSeries::operator*(const EgfSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("EgfSeries: order mismatch");
  EgfSeries r(order_);
  for (int n = 0; n <= order_; ++n) {
    Poly2 acc;
    for (int k = 0; k <= n; ++k)
      acc += (c_[k] * o.c_[n - k]) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    r.c_[n] = std::move(acc);
  }
  return r;
}

EgfSeries EgfSeries::reciprocal() const {
  if (!(c_[0] == Poly2(1))) throw std::domain_error("EgfSeries: constant coefficient must be 1");
  EgfSeries g(order_);
  g.c_[0] = Poly2(1);
  for (int n = 1; n <= order_; ++n) {
    Poly2 acc;
    for (int k = 1; k <= n; ++k)
      acc += (c_[k] * g.c_[n - k]) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    g.c_[n] = -acc;
  }
  return g;
}

EgfSeries EgfSeries::derivative() const {
  if (order_ == 0) throw std::invalid_argument("EgfSeries: cannot differentiate order-0 series");
  EgfSeries r(order_ - 1);
  for (int n = 0; n < order_; ++n) r.c_[n] = c_[n + 1];
  return r;
}

EgfSeries EgfSeries::pow(unsigned e) const {
  EgfSeries r(order_);
  r.c_[0] = Poly2(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

EgfSeries EgfSeries::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("EgfSeries: cannot extend truncation");
  EgfSeries r(new_order);
  for (int n = 0; n <= new_order; ++n) r.c_[n] = c_[n];
  return r;
}

}  // namespace snakepoly
