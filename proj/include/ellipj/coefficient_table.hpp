// coefficient_table.hpp
//
// Exact generation of the Maclaurin coefficient polynomials of the
// Jacobi elliptic functions,
//
//   sn(z,m) = sum (-1)^n s_n(m) z^(2n+1)/(2n+1)!,
//   cn(z,m) = sum (-1)^n c_n(m) z^(2n)/(2n)!,
//   dn(z,m) = sum (-1)^n d_n(m) z^(2n)/(2n)!,
//
// where s_n, c_n, d_n are polynomials in m with positive integer
// coefficients (d_n has zero constant term for n >= 1).  Generation runs
// the Taylor recursion of the defining ODE system
//
//   sn' = cn dn,   cn' = -sn dn,   dn' = -m sn cn
//
// on factorial-premultiplied coefficients, i.e. the z-order-k coefficient
// is stored as the integer polynomial k! * [z^k], which turns the Cauchy
// products into binomial-weighted convolutions with no division anywhere.
// Working with the argument rotated to the imaginary axis (z -> iz) flips
// every sign positive, so the arrays below are the s_n/c_n/d_n themselves
// and positivity can be asserted as they are produced.
//
// Sample values, useful as anchors:
//   s_n(1) = 1, 2, 16, 272, ...   (tangent numbers; tanh z = sum ...)
//   c_n(1) = d_n(1) = 1, 1, 5, 61, ...  (secant numbers; sech z = sum ...)
//   s_n(0) = c_n(0) = 1, d_n(0) = [n == 0]   (sin/cos/1 degeneration)

#ifndef ELLIPJ_COEFFICIENT_TABLE_HPP
#define ELLIPJ_COEFFICIENT_TABLE_HPP

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ellipj/integer_polynomial.hpp"

namespace ellipj {

enum class Kind { sn, cn, dn };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::sn: return "sn";
    case Kind::cn: return "cn";
    default: return "dn";
  }
}

/// The three polynomial families up to a fixed index, immutable after
/// generation and safe to share across threads.
class CoefficientTable {
 public:
  std::size_t max_index() const { return sn_.size() - 1; }

  const IntegerPolynomial& poly(Kind k, std::size_t n) const {
    const auto& fam = family(k);
    if (n >= fam.size())
      throw std::out_of_range("coefficient index exceeds table");
    return fam[n];
  }

  const std::vector<IntegerPolynomial>& family(Kind k) const {
    switch (k) {
      case Kind::sn: return sn_;
      case Kind::cn: return cn_;
      default: return dn_;
    }
  }

 private:
  friend CoefficientTable generate_table(std::size_t);
  CoefficientTable(std::vector<IntegerPolynomial> sn,
                   std::vector<IntegerPolynomial> cn,
                   std::vector<IntegerPolynomial> dn)
      : sn_(std::move(sn)), cn_(std::move(cn)), dn_(std::move(dn)) {}

  std::vector<IntegerPolynomial> sn_, cn_, dn_;
};

namespace detail {

using PolyVec = std::vector<BigInt>;

// out += scale * x * y, with an optional extra power of m on the product.
inline void add_scaled_product(PolyVec& out, const BigInt& scale,
                               const PolyVec& x, const PolyVec& y,
                               std::size_t shift) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p] == 0) continue;
    BigInt xs = scale * x[p];
    for (std::size_t q = 0; q < y.size(); ++q) out[p + q + shift] += xs * y[q];
  }
}

}  // namespace detail

/// Generates the families s_0..s_N, c_0..c_N, d_0..d_N exactly.
/// Deterministic; cost grows like N^4 big-integer multiplications, which
/// keeps interactive use below N of a few hundred (N = 40 is milliseconds,
/// N = 128 tens of seconds).  Every produced coefficient is checked to be a
/// positive integer (zero constant term for d_n, n >= 1); a violation would
/// be a generator bug and throws logic_error.
inline CoefficientTable generate_table(std::size_t max_index) {
  using detail::PolyVec;
  const std::size_t N = max_index;
  const std::size_t K = 2 * N + 1;  // highest z-order needed

  // a[k], b[k], g[k]: integer m-polynomials k![z^k] of the rotated system;
  // a lives on odd k, b and g on even k.
  std::vector<PolyVec> a(K + 1), b(K + 1), g(K + 1);
  a[1] = {1};
  b[0] = {1};
  g[0] = {1};

  // Pascal row C(k, .) maintained incrementally.
  std::vector<BigInt> binom = {1, 1};  // C(1, .)

  for (std::size_t k = 1; k < K; ++k) {
    const std::size_t kk = k + 1;
    if (kk % 2 == 1) {
      // a[kk] = sum_{i+j=k, even} C(k,i) b[i] g[j];  degree (kk-1)/2.
      PolyVec acc((kk - 1) / 2 + 1, 0);
      for (std::size_t i = 0; i <= k; i += 2) {
        const std::size_t j = k - i;
        if (b[i].empty() || g[j].empty()) continue;
        detail::add_scaled_product(acc, binom[i], b[i], g[j], 0);
      }
      a[kk] = std::move(acc);
    } else {
      const std::size_t n = kk / 2;
      PolyVec accb(n > 0 ? n : 1, 0);  // c_n has degree n-1 (n >= 1)
      PolyVec accg(n + 1, 0);          // d_n has degree n, zero constant
      for (std::size_t i = 1; i <= k; i += 2) {
        const std::size_t j = k - i;
        if (a[i].empty()) continue;
        if (!g[j].empty())
          detail::add_scaled_product(accb, binom[i], a[i], g[j], 0);
        if (!b[j].empty())
          detail::add_scaled_product(accg, binom[i], a[i], b[j], 1);
      }
      b[kk] = std::move(accb);
      g[kk] = std::move(accg);
    }
    // advance Pascal row to C(k+1, .)
    binom.push_back(1);
    for (std::size_t i = binom.size() - 2; i >= 1; --i) binom[i] += binom[i - 1];
  }

  auto emit = [](PolyVec v, bool zero_constant) {
    IntegerPolynomial p(std::move(v));
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const bool must_be_zero = zero_constant && i == 0;
      if (must_be_zero ? c[i] != 0 : c[i] <= 0)
        throw std::logic_error("coefficient generator produced a non-positive entry");
    }
    return p;
  };

  std::vector<IntegerPolynomial> sn, cn, dn;
  sn.reserve(N + 1);
  cn.reserve(N + 1);
  dn.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    sn.push_back(emit(std::move(a[2 * n + 1]), false));
    cn.push_back(emit(std::move(b[2 * n]), false));
    dn.push_back(emit(std::move(g[2 * n]), n >= 1));
  }
  return CoefficientTable(std::move(sn), std::move(cn), std::move(dn));
}

/// JSON export: one object per polynomial, decimal-string coefficients so
/// nothing is rounded.  Byte output is deterministic for a given table.
inline void write_table_json(const CoefficientTable& table, std::ostream& os) {
  os << "[\n";
  bool first = true;
  for (Kind k : {Kind::sn, Kind::cn, Kind::dn}) {
    for (std::size_t n = 0; n <= table.max_index(); ++n) {
      if (!first) os << ",\n";
      first = false;
      os << R"({"kind":")" << kind_name(k) << R"(","n":)" << n
         << R"(,"coeffs":[)";
      const auto& c = table.poly(k, n).coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << '"' << c[i].str() << '"';
      }
      os << "]}";
    }
  }
  os << "\n]\n";
}

}  // namespace ellipj

#endif  // ELLIPJ_COEFFICIENT_TABLE_HPP
