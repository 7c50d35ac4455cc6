#pragma once

#include <cstddef>
#include <optional>

#include "ineqcert/piecewise_poly.hpp"
#include "ineqcert/verdict.hpp"

namespace ineqcert {

/// Integrand f^alpha / g^beta; without g it is f^alpha.
struct Integrand {
  PiecewisePoly f;
  Rational alpha{1};
  std::optional<PiecewisePoly> g;
  Rational beta{0};
};

/// lower <= integral <= upper. Bounds are exact rationals (sums of piece
/// widths times dyadic range bounds).
struct RiemannEnclosure {
  std::size_t partition_count = 0;
  Rational lower;
  Rational upper;

  Rational width() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

struct IntegralOptions {
  std::size_t initial_partitions = 16;
  std::size_t max_partitions = 4096;
  unsigned positivity_depth = 24;
  /// Bits used for the per-piece power enclosures.
  unsigned precision = 128;
  CertifyOptions certify;
};

/// Upper and lower Riemann-type sums over a uniform grid of `partitions`
/// pieces refined by the breakpoints of f and g. Positivity of f (negative
/// or fractional alpha) and g (nonzero beta) is certified first.
RiemannEnclosure enclose_integral(const Integrand& h, const Rational& lo, const Rational& hi, std::size_t partitions,
                                  const IntegralOptions& options = {});

/// int f^(m+1)/g^m >= (int f)^(m+1) / (int g)^m on [lo, hi], m >= 0 or
/// m <= -1, f and g positive.
Verdict check_integral_radon(const PiecewisePoly& f, const PiecewisePoly& g, const Rational& lo,
                             const Rational& hi, const Rational& m, const IntegralOptions& options = {});

/// int f^r/g^s >= (int f)^r / ((hi-lo)^(r-s-1) (int g)^s), rs >= 0 and
/// r >= s+1.
Verdict check_integral_radon_general(const PiecewisePoly& f, const PiecewisePoly& g, const Rational& lo,
                                     const Rational& hi, const Rational& r, const Rational& s,
                                     const IntegralOptions& options = {});

}  // namespace ineqcert
