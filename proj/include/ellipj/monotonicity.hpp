// monotonicity.hpp
//
// The quotient functions behind the sharp bounds,
//
//   f1(m1) = sn(u,m1)/cn(u,m1),  f2(m1) = 1/cn(u,m1),  f3(m1) = dn(u,m1)/cn(u,m1),
//
// are strictly decreasing in m1 on [0, 1] for fixed u in (0, pi/2) — that
// is exactly why the m1 bound sits below the tan / 1/cos bound (the m1 = 0
// endpoint).  This module samples their m1-derivatives two independent
// ways: analytically, by quotient rule over the term-wise differentiated
// series (the functions take m1 in the parameter slot, so this is a plain
// d/dm at m = m1 — no chain-rule sign flip), and by central finite
// differences over the AGM path.  The two must agree; both must be
// negative away from u = 0.

#ifndef ELLIPJ_MONOTONICITY_HPP
#define ELLIPJ_MONOTONICITY_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "ellipj/agm.hpp"
#include "ellipj/bounds.hpp"
#include "ellipj/errors.hpp"
#include "ellipj/series_eval.hpp"

namespace ellipj {

struct FTriple {
  double f1, f2, f3;
};

/// (sn/cn, 1/cn, dn/cn) at (u, m1).  Same code path as sharp_bounds, so
/// the two agree bitwise.
inline FTriple f_values(double u, double m1) {
  if (!(u >= 0.0 && u < kHalfPi))
    throw DomainError("f_values: need 0 <= u < pi/2, got " + std::to_string(u));
  if (!(m1 >= 0.0 && m1 <= 1.0))
    throw DomainError("f_values: need m1 in [0, 1], got " + std::to_string(m1));
  JacobiTriple q = jacobi_ratios(u, m1);
  return {q.sn, q.cn, q.dn};
}

struct FDerivatives {
  double df1, df2, df3;
};

namespace detail {

inline double fd_sample(int j, double u, double m1) {
  FTriple f = f_values(u, m1);
  return j == 0 ? f.f1 : j == 1 ? f.f2 : f.f3;
}

// Central difference, falling back to second-order one-sided stencils at
// the ends of [0, 1].
inline double finite_difference(int j, double u, double m1, double h) {
  if (m1 - h >= 0.0 && m1 + h <= 1.0)
    return (fd_sample(j, u, m1 + h) - fd_sample(j, u, m1 - h)) / (2.0 * h);
  if (m1 - h < 0.0)
    return (-3.0 * fd_sample(j, u, m1) + 4.0 * fd_sample(j, u, m1 + h) -
            fd_sample(j, u, m1 + 2.0 * h)) /
           (2.0 * h);
  return (3.0 * fd_sample(j, u, m1) - 4.0 * fd_sample(j, u, m1 - h) +
          fd_sample(j, u, m1 - 2.0 * h)) /
         (2.0 * h);
}

}  // namespace detail

/// Analytic m1-derivatives of (f1, f2, f3) at (u, m1), cross-checked
/// against finite differences of stride h over the AGM path.  The routes
/// must agree to 1e-5 relative (1e-8 absolute near zeros); disagreement
/// throws ConsistencyError carrying both values.
inline FDerivatives f_derivatives(double u, double m1, double h) {
  if (!(h > 0.0 && 2.0 * h <= 1.0))
    throw DomainError("f_derivatives: need 0 < h <= 1/2");
  if (!(u >= 0.0 && u < kHalfPi) || !(m1 >= 0.0 && m1 <= 1.0))
    throw DomainError("f_derivatives: (u, m1) outside [0, pi/2) x [0, 1]");

  const SeriesTable& table = default_table();
  const std::complex<double> zu(u, 0.0), mm(m1, 0.0);
  const double sn = sn_series(zu, mm, 1e-12, table).value.real();
  const double cn = cn_series(zu, mm, 1e-12, table).value.real();
  const double dn = dn_series(zu, mm, 1e-12, table).value.real();
  const double dsn = sn_dm_series(zu, mm, 1e-10, table).value.real();
  const double dcn = cn_dm_series(zu, mm, 1e-10, table).value.real();
  const double ddn = dn_dm_series(zu, mm, 1e-10, table).value.real();
  const double cn2 = cn * cn;

  FDerivatives d;
  d.df1 = (dsn * cn - sn * dcn) / cn2;
  d.df2 = -dcn / cn2;
  d.df3 = (ddn * cn - dn * dcn) / cn2;

  const double analytic[3] = {d.df1, d.df2, d.df3};
  for (int j = 0; j < 3; ++j) {
    const double fd = detail::finite_difference(j, u, m1, h);
    const double diff = std::abs(analytic[j] - fd);
    if (diff > 1e-5 * std::abs(analytic[j]) && diff > 1e-8)
      throw ConsistencyError(
          "f" + std::to_string(j + 1) +
              "' analytic/finite-difference mismatch at u = " +
              std::to_string(u) + ", m1 = " + std::to_string(m1),
          analytic[j], fd);
  }
  return d;
}

struct MonotonicityReport {
  double u = 0.0;
  std::vector<double> m1_grid;
  std::vector<double> df1, df2, df3;
  double min_abs_derivative = 0.0;
  bool all_negative = false;
};

/// Samples the derivatives over u_grid x m1_grid (m1_grid strictly
/// increasing).  all_negative is true iff u > 0 and every sampled
/// derivative is negative; the u = 0 row always reports false (the
/// functions are constant there).  Consecutive-sample monotonicity of the
/// values themselves is asserted as well for u > 0.
inline std::vector<MonotonicityReport> verify_monotone(
    const std::vector<double>& u_grid, const std::vector<double>& m1_grid,
    double h = 1e-5) {
  for (double u : u_grid)
    if (!(u >= 0.0 && u < kHalfPi))
      throw DomainError("verify_monotone: u outside [0, pi/2)");
  for (std::size_t i = 0; i < m1_grid.size(); ++i) {
    if (!(m1_grid[i] >= 0.0 && m1_grid[i] <= 1.0))
      throw DomainError("verify_monotone: m1 outside [0, 1]");
    if (i > 0 && !(m1_grid[i] > m1_grid[i - 1]))
      throw DomainError("verify_monotone: m1 grid must be strictly increasing");
  }

  std::vector<MonotonicityReport> out;
  out.reserve(u_grid.size());
  for (double u : u_grid) {
    MonotonicityReport rep;
    rep.u = u;
    rep.m1_grid = m1_grid;
    rep.min_abs_derivative = std::numeric_limits<double>::infinity();
    bool negative = true;
    for (double m1 : m1_grid) {
      FDerivatives d = f_derivatives(u, m1, h);
      rep.df1.push_back(d.df1);
      rep.df2.push_back(d.df2);
      rep.df3.push_back(d.df3);
      for (double v : {d.df1, d.df2, d.df3}) {
        rep.min_abs_derivative = std::min(rep.min_abs_derivative, std::abs(v));
        negative = negative && v < 0.0;
      }
    }
    rep.all_negative = u > 0.0 && negative;
    if (u > 0.0) {
      for (std::size_t i = 1; i < m1_grid.size(); ++i) {
        FTriple lo = f_values(u, m1_grid[i - 1]);
        FTriple hi = f_values(u, m1_grid[i]);
        if (!(lo.f1 > hi.f1 && lo.f2 > hi.f2 && lo.f3 > hi.f3))
          throw ConsistencyError(
              "sampled values fail strict decrease at u = " + std::to_string(u),
              lo.f1, hi.f1);
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

/// One JSON object per grid row.
inline std::string to_json(const MonotonicityReport& rep) {
  std::string out;
  out.reserve(256 + 96 * rep.m1_grid.size());
  auto array = [&out](const char* name, const std::vector<double>& v) {
    out += '"';
    out += name;
    out += "\":[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      detail::json_number(out, v[i]);
    }
    out += ']';
  };
  out += R"({"u":)";
  detail::json_number(out, rep.u);
  out += ',';
  array("m1_grid", rep.m1_grid);
  out += ',';
  array("df1", rep.df1);
  out += ',';
  array("df2", rep.df2);
  out += ',';
  array("df3", rep.df3);
  out += R"(,"min_abs_derivative":)";
  detail::json_number(out, rep.min_abs_derivative);
  out += R"(,"all_negative":)";
  out += rep.all_negative ? "true" : "false";
  out += '}';
  return out;
}

}  // namespace ellipj

#endif  // ELLIPJ_MONOTONICITY_HPP
