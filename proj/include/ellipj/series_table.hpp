// series_table.hpp
//
// Evaluation-ready form of the Maclaurin coefficient polynomials: row n of
// family f holds the coefficients of the scaled polynomial
//
//   sn:  s_n(m) / (2n+1)!      cn:  c_n(m) / (2n)!      dn:  d_n(m) / (2n)!
//
// as doubles.  Scaled this way every entry is tame (the row sums decay
// like (2r/pi)^(2n) inside the convergence disk), so rows can be Horner-
// evaluated and combined with z-powers without ever touching the huge raw
// integers.  Alongside each row the table keeps its value at m = 1 (the
// majorant: tangent/secant number over factorial), which is what the
// truncation bounds are made of.
//
// Construction is two-tier:
//   * rows up to exact_max_index come from the exact big-integer
//     generator, divided by the factorial in extended precision
//     (correctly rounded to ~1 ulp);
//   * rows beyond come from running the factorial-normalized value
//     recurrence of the defining ODE system at the M-th roots of unity in
//     extended precision and recovering monomial coefficients by inverse
//     DFT.  The recurrence has positive coefficients in the rotated
//     orientation, magnitudes are majorized by the m = 1 node, and the
//     DFT matrix is unitary, so the recovered rows carry only a few ulp
//     of error.  Cost is O(M N^2), well under a second for N ~ 400,
//     where the exact generator's O(N^4) big-integer work would take
//     hours.
//
// Why rows into the hundreds at all: the majorant series is the tangent
// series, whose terms shrink by only (2r/pi)^2 per index, i.e. ~0.91 at
// r = 1.5.  Reaching a 1e-13 tail there takes ~350 terms; an index-40
// table leaves a tail of 0.31.  (At r = 1.0 the ratio is 0.41 and index
// 40 already over-delivers.)

#ifndef ELLIPJ_SERIES_TABLE_HPP
#define ELLIPJ_SERIES_TABLE_HPP

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ellipj/coefficient_table.hpp"
#include "ellipj/errors.hpp"
#include "ellipj/integer_polynomial.hpp"

namespace ellipj {

namespace detail {

struct Cld {
  long double re = 0.0L, im = 0.0L;
};
inline Cld cmul(Cld a, Cld b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cld cadd(Cld a, Cld b) { return {a.re + b.re, a.im + b.im}; }

inline long double factorial_ld(unsigned k) {
  long double f = 1.0L;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

// One pass of the factorial-normalized value recurrence at parameter m:
// fills values[f][n] (f: 0 = sn-row, 1 = cn-row, 2 = dn-row) for n <= N.
inline void value_recurrence(Cld m, std::size_t N,
                             std::vector<Cld> (&values)[3]) {
  const std::size_t K = 2 * N + 1;
  std::vector<Cld> a(K + 1), b(K + 1), g(K + 1);
  a[1] = {1.0L, 0.0L};
  b[0] = {1.0L, 0.0L};
  g[0] = {1.0L, 0.0L};
  for (std::size_t k = 1; k < K; ++k) {
    const std::size_t kk = k + 1;
    if (kk % 2 == 1) {
      Cld acc;
      for (std::size_t i = 0; i <= k; i += 2) acc = cadd(acc, cmul(b[i], g[k - i]));
      a[kk] = {acc.re / kk, acc.im / kk};
    } else {
      Cld accb, accg;
      for (std::size_t i = 1; i <= k; i += 2) {
        accb = cadd(accb, cmul(a[i], g[k - i]));
        accg = cadd(accg, cmul(a[i], b[k - i]));
      }
      accg = cmul(m, accg);
      b[kk] = {accb.re / kk, accb.im / kk};
      g[kk] = {accg.re / kk, accg.im / kk};
    }
  }
  for (int f = 0; f < 3; ++f) values[f].resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    values[0][n] = a[2 * n + 1];
    values[1][n] = b[2 * n];
    values[2][n] = g[2 * n];
  }
}

}  // namespace detail

/// Immutable scaled-coefficient table; safe for concurrent readers.
class SeriesTable {
 public:
  /// Builds rows 0..max_index.  Rows up to exact_max_index (clamped to
  /// max_index) are derived from the exact integer generator.
  static SeriesTable build(std::size_t max_index,
                           std::size_t exact_max_index = 40);

  std::size_t max_index() const { return rows_[0].size() - 1; }
  std::size_t exact_max_index() const { return exact_max_index_; }

  const std::vector<double>& row(Kind k, std::size_t n) const {
    return rows_[static_cast<int>(k)][n];
  }

  /// Row value at m = 1: s_n(1)/(2n+1)! resp. c_n(1)/(2n)!, d_n(1)/(2n)!.
  double majorant(Kind k, std::size_t n) const {
    return maj_[static_cast<int>(k)][n];
  }

 private:
  SeriesTable() = default;
  std::vector<std::vector<double>> rows_[3];
  std::vector<double> maj_[3];
  std::size_t exact_max_index_ = 0;
};

inline SeriesTable SeriesTable::build(std::size_t max_index,
                                      std::size_t exact_max_index) {
  using detail::Cld;
  const std::size_t N = max_index;
  const std::size_t NE = std::min(exact_max_index, N);
  SeriesTable t;
  t.exact_max_index_ = NE;
  for (int f = 0; f < 3; ++f) {
    t.rows_[f].resize(N + 1);
    t.maj_[f].assign(N + 1, 0.0);
  }

  // Exact tier: integer polynomials divided by the factorial.
  CoefficientTable exact = generate_table(NE);
  for (std::size_t n = 0; n <= NE; ++n) {
    const long double fs = detail::factorial_ld(2 * n + 1);
    const long double fc = detail::factorial_ld(2 * n);
    auto scale = [](const IntegerPolynomial& p, long double fact,
                    std::vector<double>& out, double& maj) {
      const auto& c = p.coefficients();
      out.resize(c.size());
      BigInt sum = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = static_cast<double>(c[i].convert_to<long double>() / fact);
        sum += c[i];
      }
      maj = static_cast<double>(sum.convert_to<long double>() / fact);
    };
    scale(exact.poly(Kind::sn, n), fs, t.rows_[0][n], t.maj_[0][n]);
    scale(exact.poly(Kind::cn, n), fc, t.rows_[1][n], t.maj_[1][n]);
    scale(exact.poly(Kind::dn, n), fc, t.rows_[2][n], t.maj_[2][n]);
  }
  if (NE == N) return t;

  // Extension tier: value recurrence at roots of unity + inverse DFT.
  std::size_t M = 1;
  while (M < N + 1) M *= 2;
  const std::size_t TH = M / 2;

  std::vector<Cld> w(M);
  for (std::size_t s = 0; s < M; ++s) {
    const long double th =
        2.0L * 3.141592653589793238462643383279502884L * s / M;
    w[s] = {std::cos(th), std::sin(th)};
  }

  // node values V[f][t][n], t = 0..M/2 (conjugate symmetry covers the rest)
  std::vector<std::vector<Cld>> V[3];
  for (int f = 0; f < 3; ++f) V[f].resize(TH + 1);
  {
    const unsigned nworkers =
        std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    auto work = [&](unsigned wid) {
      std::vector<Cld> vals[3];
      for (std::size_t tt = wid; tt <= TH; tt += nworkers) {
        detail::value_recurrence(w[tt], N, vals);
        for (int f = 0; f < 3; ++f) V[f][tt] = std::move(vals[f]);
      }
    };
    if (nworkers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < nworkers; ++i) pool.emplace_back(work, i);
      for (auto& th : pool) th.join();
    }
  }

  for (std::size_t n = NE + 1; n <= N; ++n) {
    for (int f = 0; f < 3; ++f) {
      const std::size_t deg = (f == 1) ? n - 1 : n;  // deg c_n = n-1
      auto& out = t.rows_[f][n];
      out.assign(deg + 1, 0.0);
      const std::size_t i0 = (f == 2) ? 1 : 0;  // d_n constant term is 0
      for (std::size_t i = i0; i <= deg; ++i) {
        long double s = V[f][0][n].re +
                        ((i & 1) ? -V[f][TH][n].re : V[f][TH][n].re);
        for (std::size_t tt = 1; tt < TH; ++tt) {
          const std::size_t idx = (i * tt) & (M - 1);
          s += 2.0L * (V[f][tt][n].re * w[idx].re + V[f][tt][n].im * w[idx].im);
        }
        out[i] = static_cast<double>(s / M);
      }
      // the m = 1 node is the majorant itself, at full extended precision
      t.maj_[f][n] = static_cast<double>(V[f][0][n].re);
    }
  }
  return t;
}

}  // namespace ellipj

#endif  // ELLIPJ_SERIES_TABLE_HPP
