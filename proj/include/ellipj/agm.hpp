// agm.hpp
//
// Real-argument, real-parameter Jacobi elliptic functions by the
// descending Landen / arithmetic-geometric-mean recurrence (Bulirsch's
// sncndn routine; R. Bulirsch, Numerical calculation of elliptic
// integrals and elliptic functions, Numer. Math. 7 (1965) 78-90).
// Completely independent of the Maclaurin-series path, so the two can
// cross-check each other.

#ifndef ELLIPJ_AGM_HPP
#define ELLIPJ_AGM_HPP

#include <cmath>
#include <limits>
#include <string>

#include "ellipj/errors.hpp"

namespace ellipj {

struct JacobiTriple {
  double sn, cn, dn;
};

/// sn(u, m1), cn(u, m1), dn(u, m1) for parameter m1 in [0, 1] (m1 sits in
/// the parameter slot; the name follows the complementary-parameter role
/// it plays for the bound computations).  Argument |u| < pi/2 is the
/// tested range; larger |u| below the quarter period also works.
/// Satisfies sn^2 + cn^2 = 1 and dn^2 + m1 sn^2 = 1 to ~1e-15.
inline JacobiTriple jacobi_real_agm(double u, double m1) {
  if (!(m1 >= 0.0 && m1 <= 1.0))
    throw DomainError("jacobi_real_agm: parameter m1 = " + std::to_string(m1) +
                      " outside [0, 1]");
  if (m1 == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m1 == 1.0) {
    double sch = 1.0 / std::cosh(u);
    return {std::tanh(u), sch, sch};
  }

  // Bulirsch's sncndn, complementary parameter mc = 1 - m1.
  // Stop once the AGM legs agree to ~sqrt(eps)/100; quadratic convergence
  // makes the remaining defect O(eps).
  static const double tol_agm =
      std::sqrt(std::numeric_limits<double>::epsilon() * 0.01);
  constexpr int kSlots = 16;
  double mu[kSlots], nu[kSlots];
  double mc = 1.0 - m1;
  double a = 1.0, c = 0.0;
  int l = 0;
  for (; l < kSlots; ++l) {
    mu[l] = a;
    nu[l] = mc = std::sqrt(mc);
    c = (a + mc) / 2;
    if (std::abs(a - mc) <= tol_agm * a) {
      ++l;
      break;
    }
    mc = a * mc;
    a = c;
  }

  double x = c * u;
  double sn = std::sin(x), cn = std::cos(x), dn = 1.0;
  if (sn != 0.0) {
    a = cn / sn;
    c = a * c;
    while (l-- > 0) {
      double b = mu[l];
      a = c * a;
      c = dn * c;
      dn = (nu[l] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = sn < 0.0 ? -a : a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

/// The quotient triple (sn/cn, 1/cn, dn/cn) at (u, m1).  This is the one
/// code path behind both the sharp bound quotients and the monotonicity
/// functions f1, f2, f3, so the two agree bitwise.  For 0 <= u < pi/2 and
/// m1 in [0, 1], u stays below the quarter period K(m1) >= pi/2 and
/// cn > 0; the guard stays anyway.
inline JacobiTriple jacobi_ratios(double u, double m1) {
  JacobiTriple f = jacobi_real_agm(u, m1);
  if (!(f.cn > 0.0))
    throw PoleError("jacobi_ratios: cn(" + std::to_string(u) + ", " +
                    std::to_string(m1) + ") = " + std::to_string(f.cn) +
                    " is not positive");
  return {f.sn / f.cn, 1.0 / f.cn, f.dn / f.cn};
}

}  // namespace ellipj

#endif  // ELLIPJ_AGM_HPP
