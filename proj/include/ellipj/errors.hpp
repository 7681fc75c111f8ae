// errors.hpp
//
// Exception types shared across the library.

#ifndef ELLIPJ_ERRORS_HPP
#define ELLIPJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellipj {

/// Input outside the supported domain (|m| <= 1, |z| < pi/2, parameter
/// ranges, malformed configuration).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// cn(u, m1) was not positive where a quotient bound needed it.  Cannot
/// happen for 0 <= u < pi/2 and m1 in [0, 1] (u stays below the real
/// quarter period), but the quotient routines guard anyway.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The coefficient table ended before the majorant tail bound dropped to
/// the requested tolerance.  Carries the bound that was achieved so callers
/// can decide whether the partial result is still useful.
class TableExhausted : public std::runtime_error {
 public:
  TableExhausted(const std::string& what, double achieved_bound,
                 double requested_tol, int terms_used)
      : std::runtime_error(what),
        achieved_bound(achieved_bound),
        requested_tol(requested_tol),
        terms_used(terms_used) {}

  double achieved_bound;
  double requested_tol;
  int terms_used;
};

/// Two independent computations of the same quantity disagreed beyond the
/// stated tolerance.  Carries both values.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, double primary, double reference)
      : std::runtime_error(what), primary(primary), reference(reference) {}

  double primary;
  double reference;
};

}  // namespace ellipj

#endif  // ELLIPJ_ERRORS_HPP
