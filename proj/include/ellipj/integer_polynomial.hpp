// integer_polynomial.hpp
//
// Dense univariate polynomial with arbitrary-precision integer
// coefficients.  Just enough surface for the coefficient tables:
// evaluation (Horner) and differentiation.  Coefficient magnitudes grow
// super-exponentially with the table index (tangent/secant numbers), so
// fixed-width integers are not an option; boost::multiprecision::cpp_int
// keeps everything exact and header-only.

#ifndef ELLIPJ_INTEGER_POLYNOMIAL_HPP
#define ELLIPJ_INTEGER_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellipj {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial sum_i c_i m^i.  Index i of the coefficient vector holds c_i.
/// The zero polynomial is the empty vector; any other value keeps its
/// trailing (highest-index) coefficient nonzero.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;

  explicit IntegerPolynomial(std::vector<BigInt> coeffs)
      : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  static IntegerPolynomial zero() { return IntegerPolynomial{}; }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial.  The zero polynomial has no degree;
  /// callers must branch on is_zero() first.
  std::size_t degree() const {
    if (is_zero())
      throw std::logic_error("degree() queried on the zero polynomial");
    return coeffs_.size() - 1;
  }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// c_i, with zero returned above the degree.
  const BigInt& coefficient(std::size_t i) const {
    static const BigInt kZero = 0;
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }

  bool operator==(const IntegerPolynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Horner evaluation, highest index first.  Exact whenever the
/// coefficients and all intermediates are representable in double
/// (e.g. small integer m and values below 2^53).
inline std::complex<double> eval_polynomial(const IntegerPolynomial& p,
                                            std::complex<double> m) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;)
    acc = acc * m + c[i].convert_to<double>();
  return acc;
}

inline double eval_polynomial(const IntegerPolynomial& p, double m) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;)
    acc = acc * m + c[i].convert_to<double>();
  return acc;
}

/// Term-wise derivative d/dm, exact.  Constants (and zero) map to zero.
inline IntegerPolynomial differentiate_polynomial(const IntegerPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return IntegerPolynomial::zero();
  std::vector<BigInt> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * BigInt(i);
  return IntegerPolynomial(std::move(d));
}

}  // namespace ellipj

#endif  // ELLIPJ_INTEGER_POLYNOMIAL_HPP
