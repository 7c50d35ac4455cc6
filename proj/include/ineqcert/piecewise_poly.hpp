#pragma once

#include <vector>

#include "ineqcert/errors.hpp"
#include "ineqcert/rational.hpp"

namespace ineqcert {

/// Polynomial with rational coefficients, c0 + c1 x + c2 x^2 + ...
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  /// Exact definite integral over [lo, hi].
  Rational integral(const Rational& lo, const Rational& hi) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;  // trailing zeros trimmed
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Closed rational interval.
struct RationalRange {
  Rational lo;
  Rational hi;
};

/// Encloses the range of p over [lo, hi]. Exact when p is monotone there
/// (derivative sign certified recursively), otherwise interval Horner.
/// Inclusion-isotone: a subinterval never gets a wider range.
RationalRange range(const Polynomial& p, const Rational& lo, const Rational& hi);

struct Segment {
  Rational lo;
  Rational hi;
  Polynomial poly;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Polynomial pieces on contiguous intervals lo_0 < hi_0 = lo_1 < ...
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  /// Throws DomainError on empty, reversed or non-contiguous segments.
  explicit PiecewisePoly(std::vector<Segment> segments);
  static PiecewisePoly constant(const Rational& value, const Rational& lo, const Rational& hi);

  const std::vector<Segment>& segments() const { return segments_; }
  const Rational& lo() const { return segments_.front().lo; }
  const Rational& hi() const { return segments_.back().hi; }
  bool covers(const Rational& lo, const Rational& hi) const;
  /// Segment containing [lo, hi]; the interval must not cross a breakpoint.
  const Polynomial& piece(const Rational& lo, const Rational& hi) const;
  /// Exact integral over [lo, hi].
  Rational integral(const Rational& lo, const Rational& hi) const;
  /// Constant on [lo, hi] (every piece is the same constant).
  bool is_constant_on(const Rational& lo, const Rational& hi) const;

  friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

 private:
  std::vector<Segment> segments_;
};

/// Positivity could not be proven within the subdivision budget, or a point
/// value is <= 0. Carries the offending subinterval.
class NotCertified : public DomainError {
 public:
  NotCertified(const Rational& lo, const Rational& hi)
      : DomainError("f > 0", "not certified on [" + lo.to_string() + ", " + hi.to_string() + "]"),
        lo_(lo),
        hi_(hi) {}

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

 private:
  Rational lo_;
  Rational hi_;
};

/// Proves f > 0 on [lo, hi] by bisection up to `max_depth` levels.
void certify_positive(const PiecewisePoly& f, const Rational& lo, const Rational& hi, unsigned max_depth = 24);

}  // namespace ineqcert
