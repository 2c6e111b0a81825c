#include "snakepoly/bigint.hpp"

#include <stdexcept>
#include <vector>

namespace snakepoly {

namespace {
constexpr unsigned kMaxRow = 80;

std::vector<std::vector<BigInt>> build_pascal() {
  std::vector<std::vector<BigInt>> rows(kMaxRow + 1);
  for (unsigned n = 0; n <= kMaxRow; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = 1;
    rows[n][n] = 1;
    for (unsigned k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}
}  // namespace

const BigInt& binomial(unsigned n, unsigned k) {
  static const std::vector<std::vector<BigInt>> table = build_pascal();
  if (n > kMaxRow) throw std::out_of_range("binomial: n exceeds cached table");
  static const BigInt zero = 0;
  if (k > n) return zero;
  return table[n][k];
}

}  // namespace snakepoly
