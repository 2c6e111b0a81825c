#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace snakepoly {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k), cached Pascal triangle. Rows up to n = 80 cover every series
// order used in this project; out-of-range arguments throw.
const BigInt& binomial(unsigned n, unsigned k);

}  // namespace snakepoly
