// bounds.hpp
//
// Elementary-function bounds for |sn(z,m)|, |cn(z,m)|, |dn(z,m)| on
// |m| <= 1, |z| < pi/2, with m1 := 1 - |m|:
//
//   |sn(z,m)| <= sn(|z|,m1)/cn(|z|,m1) <= tan|z|
//   |cn(z,m)| <=        1/cn(|z|,m1)   <= 1/cos|z|
//   |dn(z,m)| <= dn(|z|,m1)/cn(|z|,m1) <= 1/cos|z|
//
// with equality at z = 0; on the imaginary axis when m is real >= 0
// (sharp bound); and on the imaginary axis when m = 1 (both bounds).
// check_theorem() evaluates one sample of all three chains and classifies
// the equality case; the sharp middle members come from the AGM path, the
// left-hand sides from the series path, so a pass also cross-validates
// the two evaluators against each other.

#ifndef ELLIPJ_BOUNDS_HPP
#define ELLIPJ_BOUNDS_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "ellipj/agm.hpp"
#include "ellipj/errors.hpp"
#include "ellipj/series_eval.hpp"

namespace ellipj {

struct SharpBounds {
  double sn_bound, cn_bound, dn_bound;
};

struct CoarseBounds {
  double tan_bound, sec_bound;
};

/// The middle members (sn/cn, 1/cn, dn/cn) at (abs_z, m1) via the AGM.
inline SharpBounds sharp_bounds(double abs_z, double m1) {
  if (!(abs_z >= 0.0 && abs_z < kHalfPi))
    throw DomainError("sharp_bounds: need 0 <= abs_z < pi/2, got " +
                      std::to_string(abs_z));
  if (!(m1 >= 0.0 && m1 <= 1.0))
    throw DomainError("sharp_bounds: need m1 in [0, 1], got " +
                      std::to_string(m1));
  JacobiTriple q = jacobi_ratios(abs_z, m1);
  return {q.sn, q.cn, q.dn};
}

/// The outer members (tan|z|, 1/cos|z|).
inline CoarseBounds coarse_bounds(double abs_z) {
  if (!(abs_z >= 0.0 && abs_z < kHalfPi))
    throw DomainError("coarse_bounds: need 0 <= abs_z < pi/2, got " +
                      std::to_string(abs_z));
  return {std::tan(abs_z), 1.0 / std::cos(abs_z)};
}

enum class EqualityCase {
  none,
  origin,
  imaginary_axis_m1_equals_one,
  imaginary_axis_m_nonneg_real,
};

inline const char* equality_case_name(EqualityCase e) {
  switch (e) {
    case EqualityCase::origin: return "origin";
    case EqualityCase::imaginary_axis_m1_equals_one:
      return "imaginary_axis_m1_equals_one";
    case EqualityCase::imaginary_axis_m_nonneg_real:
      return "imaginary_axis_m_nonneg_real";
    default: return "none";
  }
}

struct BoundRecord {
  double lhs = 0.0;           // |function value| from the series path
  double sharp = 0.0;         // m1 quotient bound from the AGM path
  double coarse = 0.0;        // tan|z| resp. 1/cos|z|
  double margin_sharp = 0.0;  // sharp - lhs
  double margin_coarse = 0.0; // coarse - sharp
  double eval_error = 0.0;    // truncation radius of the series evaluation

  bool passes() const {
    return margin_sharp >= -2.0 * eval_error &&
           margin_coarse >= -2.0 * eval_error;
  }
};

struct BoundReport {
  std::complex<double> z, m;
  double m1 = 0.0;
  BoundRecord sn, cn, dn;
  EqualityCase equality_case = EqualityCase::none;

  bool passes() const { return sn.passes() && cn.passes() && dn.passes(); }
};

/// Evaluates the three bound chains at one (z, m).  Equality cases are
/// classified by exact predicates on the inputs (callers wanting fuzzy
/// classification snap their inputs first).
inline BoundReport check_theorem(std::complex<double> z, std::complex<double> m,
                                 double tol) {
  const SeriesTable& table = default_table();
  EvalResult esn = sn_series(z, m, tol, table);
  EvalResult ecn = cn_series(z, m, tol, table);
  EvalResult edn = dn_series(z, m, tol, table);

  const double r = std::abs(z);
  const double m1 = std::max(0.0, 1.0 - std::abs(m));
  SharpBounds sharp = sharp_bounds(r, m1);
  CoarseBounds coarse = coarse_bounds(r);

  auto record = [](const EvalResult& e, double sh, double co) {
    BoundRecord rec;
    rec.lhs = std::abs(e.value);
    rec.sharp = sh;
    rec.coarse = co;
    rec.margin_sharp = sh - rec.lhs;
    rec.margin_coarse = co - sh;
    rec.eval_error = e.error_radius;
    return rec;
  };

  BoundReport rep;
  rep.z = z;
  rep.m = m;
  rep.m1 = m1;
  rep.sn = record(esn, sharp.sn_bound, coarse.tan_bound);
  rep.cn = record(ecn, sharp.cn_bound, coarse.sec_bound);
  rep.dn = record(edn, sharp.dn_bound, coarse.sec_bound);

  if (z == std::complex<double>(0.0, 0.0)) {
    rep.equality_case = EqualityCase::origin;
  } else if (z.real() == 0.0 && m == std::complex<double>(1.0, 0.0)) {
    rep.equality_case = EqualityCase::imaginary_axis_m1_equals_one;
  } else if (z.real() == 0.0 && m.imag() == 0.0 && m.real() >= 0.0) {
    rep.equality_case = EqualityCase::imaginary_axis_m_nonneg_real;
  }
  return rep;
}

namespace detail {

inline void check_imag_transform_args(double y, std::complex<double> m) {
  if (!(m.imag() == 0.0 && m.real() >= 0.0 && m.real() <= 1.0))
    throw DomainError(
        "imaginary-axis transform is defined for real m in [0, 1] only "
        "(1 - m must stay in the unit disk)");
  if (!(std::abs(y) < kHalfPi))
    throw DomainError("imaginary-axis transform requires |y| < pi/2");
}

// Both routes for sn(iy, m) etc.: quotient identity at parameter 1 - m
// (Jacobi imaginary transformation, Abramowitz & Stegun 16.20) against
// the series path.  Index: 0 = sn, 1 = cn, 2 = dn.
inline std::pair<std::complex<double>, std::complex<double>>
imag_transform_routes(int which, double y, std::complex<double> m, double tol) {
  check_imag_transform_args(y, m);
  JacobiTriple q = jacobi_ratios(y, 1.0 - m.real());
  std::complex<double> identity =
      which == 0 ? std::complex<double>(0.0, q.sn)
                 : std::complex<double>(which == 1 ? q.cn : q.dn, 0.0);
  const std::complex<double> iy(0.0, y);
  const SeriesTable& table = default_table();
  EvalResult series = which == 0   ? sn_series(iy, m, tol, table)
                      : which == 1 ? cn_series(iy, m, tol, table)
                                   : dn_series(iy, m, tol, table);
  double resid = std::abs(identity - series.value);
  if (resid > 1e-11 + series.error_radius)
    throw ConsistencyError(
        "imaginary-axis transform disagrees with the series path by " +
            std::to_string(resid),
        std::abs(identity), std::abs(series.value));
  return {identity, series.value};
}

}  // namespace detail

/// sn(iy, m) = i sn(y, 1-m)/cn(y, 1-m), for real m in [0, 1].  The series
/// path is evaluated alongside at tolerance tol and must agree to 1e-11
/// (plus its own truncation radius); disagreement throws ConsistencyError.
inline std::complex<double> imag_transform_sn(double y, std::complex<double> m,
                                              double tol) {
  return detail::imag_transform_routes(0, y, m, tol).first;
}

/// cn(iy, m) = 1/cn(y, 1-m).
inline std::complex<double> imag_transform_cn(double y, std::complex<double> m,
                                              double tol) {
  return detail::imag_transform_routes(1, y, m, tol).first;
}

/// dn(iy, m) = dn(y, 1-m)/cn(y, 1-m).
inline std::complex<double> imag_transform_dn(double y, std::complex<double> m,
                                              double tol) {
  return detail::imag_transform_routes(2, y, m, tol).first;
}

/// |identity route - series route| for the three transforms; what the
/// verification sweeps record.
inline double imag_transform_residual(int which, double y,
                                      std::complex<double> m, double tol) {
  auto [identity, series] = detail::imag_transform_routes(which, y, m, tol);
  return std::abs(identity - series);
}

namespace detail {

inline void json_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

inline void json_complex(std::string& out, std::complex<double> v) {
  out += R"({"re":)";
  json_number(out, v.real());
  out += R"(,"im":)";
  json_number(out, v.imag());
  out += '}';
}

inline void json_record(std::string& out, const char* name,
                        const BoundRecord& r) {
  out += '"';
  out += name;
  out += R"(":{"lhs":)";
  json_number(out, r.lhs);
  out += R"(,"sharp":)";
  json_number(out, r.sharp);
  out += R"(,"coarse":)";
  json_number(out, r.coarse);
  out += R"(,"margin_sharp":)";
  json_number(out, r.margin_sharp);
  out += R"(,"margin_coarse":)";
  json_number(out, r.margin_coarse);
  out += R"(,"eval_error":)";
  json_number(out, r.eval_error);
  out += '}';
}

}  // namespace detail

/// One JSON object (no trailing newline) with the fields of the report.
inline std::string to_json(const BoundReport& rep) {
  std::string out;
  out.reserve(512);
  out += R"({"z":)";
  detail::json_complex(out, rep.z);
  out += R"(,"m":)";
  detail::json_complex(out, rep.m);
  out += R"(,"m1":)";
  detail::json_number(out, rep.m1);
  out += ',';
  detail::json_record(out, "sn", rep.sn);
  out += ',';
  detail::json_record(out, "cn", rep.cn);
  out += ',';
  detail::json_record(out, "dn", rep.dn);
  out += R"(,"equality_case":")";
  out += equality_case_name(rep.equality_case);
  out += "\"}";
  return out;
}

}  // namespace ellipj

#endif  // ELLIPJ_BOUNDS_HPP
