// oracles.hpp
//
// Independent reference computations used by the tests.  Nothing in here
// may call into the series/table code it is checking.

#ifndef ELLIPJ_TESTS_ORACLES_HPP
#define ELLIPJ_TESTS_ORACLES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace oracles {

using BigInt = boost::multiprecision::cpp_int;

/// Zigzag (Euler up/down) numbers 1, 1, 1, 2, 5, 16, 61, 272, 1385, ...
/// via the Seidel boustrophedon triangle.  Odd positions are the tangent
/// numbers (Maclaurin coefficients of tan/tanh up to sign), even positions
/// the secant numbers (coefficients of sec/sech).  This is a completely
/// different recurrence from the ODE-driven generator under test.
inline std::vector<BigInt> zigzag_numbers(std::size_t count) {
  std::vector<BigInt> zig;
  zig.reserve(count);
  std::vector<BigInt> prev = {1};
  zig.push_back(1);
  for (std::size_t k = 1; k < count; ++k) {
    std::vector<BigInt> cur(k + 1);
    cur[0] = 0;
    for (std::size_t i = 1; i <= k; ++i) cur[i] = cur[i - 1] + prev[k - i];
    zig.push_back(cur[k]);
    prev = std::move(cur);
  }
  return zig;
}

inline BigInt tangent_number(const std::vector<BigInt>& zig, std::size_t n) {
  return zig.at(2 * n + 1);
}

inline BigInt secant_number(const std::vector<BigInt>& zig, std::size_t n) {
  return zig.at(2 * n);
}

}  // namespace oracles

#endif  // ELLIPJ_TESTS_ORACLES_HPP
