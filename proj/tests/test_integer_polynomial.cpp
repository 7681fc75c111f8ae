// Unit tests for IntegerPolynomial: evaluation, differentiation, and the
// zero-polynomial conventions.

#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "ellipj/integer_polynomial.hpp"

using ellipj::BigInt;
using ellipj::IntegerPolynomial;

TEST_CASE("zero polynomial is the empty sequence") {
  IntegerPolynomial z;
  CHECK(z.is_zero());
  CHECK(z == IntegerPolynomial::zero());
  CHECK_THROWS_AS(z.degree(), std::logic_error);
  // trailing zeros trim down to the zero polynomial
  IntegerPolynomial z2(std::vector<BigInt>{0, 0, 0});
  CHECK(z2.is_zero());
}

TEST_CASE("trailing zeros are trimmed, degree reflects the top term") {
  IntegerPolynomial p(std::vector<BigInt>{1, 14, 1, 0, 0});
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(1) == 14);
  CHECK(p.coefficient(5) == 0);
}

TEST_CASE("evaluation matches hand values and is exact on small integers") {
  IntegerPolynomial s1(std::vector<BigInt>{1, 1});       // 1 + m
  IntegerPolynomial s2(std::vector<BigInt>{1, 14, 1});   // 1 + 14m + m^2
  IntegerPolynomial d1(std::vector<BigInt>{0, 1});       // m

  CHECK(ellipj::eval_polynomial(s1, 1.0) == 2.0);   // tangent number 2
  CHECK(ellipj::eval_polynomial(s2, 1.0) == 16.0);  // tangent number 16
  CHECK(ellipj::eval_polynomial(d1, 0.0) == 0.0);

  std::complex<double> m{0.25, -0.5};
  auto v = ellipj::eval_polynomial(s2, m);
  auto want = 1.0 + 14.0 * m + m * m;
  CHECK(std::abs(v - want) < 1e-15);

  // zero polynomial evaluates to 0 everywhere
  CHECK(ellipj::eval_polynomial(IntegerPolynomial::zero(), 3.5) == 0.0);
}

TEST_CASE("differentiation is the power rule") {
  IntegerPolynomial s2(std::vector<BigInt>{1, 14, 1});
  IntegerPolynomial d2(std::vector<BigInt>{0, 4, 1});
  CHECK(ellipj::differentiate_polynomial(s2) ==
        IntegerPolynomial(std::vector<BigInt>{14, 2}));
  CHECK(ellipj::differentiate_polynomial(d2) ==
        IntegerPolynomial(std::vector<BigInt>{4, 2}));
  // constants and zero collapse to zero
  CHECK(ellipj::differentiate_polynomial(IntegerPolynomial(std::vector<BigInt>{1}))
            .is_zero());
  CHECK(ellipj::differentiate_polynomial(IntegerPolynomial::zero()).is_zero());
  // degree drops by exactly one
  CHECK(ellipj::differentiate_polynomial(s2).degree() == 1);
}
