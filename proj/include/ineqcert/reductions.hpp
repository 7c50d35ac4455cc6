#pragma once

#include <optional>
#include <vector>

#include "ineqcert/instance.hpp"
#include "ineqcert/verdict.hpp"

namespace ineqcert {

/// A source instance rewritten into another family. `identity_checked` is
/// set when every term identity between the two formulations was verified
/// by exact evaluation (always the case for integer exponents).
struct ReductionRecord {
  InequalityInstance source;
  InequalityInstance target;
  bool identity_checked = false;
};

/// Weighted power sum sum p_k y_k^(r/s) as a Radon instance:
/// a'_k = p_k y_k, b'_k = p_k, m = r/s - 1. The source is recorded as the
/// PowerMean instance (weights p, points y, exponents r/s and 1).
ReductionRecord radon_to_powermean(const std::vector<Rational>& p, const std::vector<Rational>& y,
                                   const Rational& r, const Rational& s);
/// Same, starting from a PowerMean instance; y_k = x_k^s must be rational.
ReductionRecord radon_to_powermean(const InequalityInstance& power_mean);

/// Radon instance (a, b, m), m >= 0, as the PowerMean instance with
/// p_k = b_k, x_k = a_k / b_k, r = m + 1, s = 1.
ReductionRecord powermean_to_radon(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   const Rational& m);
ReductionRecord powermean_to_radon(const InequalityInstance& radon);

struct SubstitutionResult {
  /// The Radon instance with b_k = a_k c_k^(1/m), present when every
  /// c_k^(1/m) is rational.
  std::optional<InequalityInstance> radon;
  /// sum a_k/c_k >= (sum a_k)^(m+1) / (sum a_k c_k^(1/m))^m.
  Verdict verdict;
};

/// Substitutes b_k = a_k c_k^(1/m) into the Radon bound. Requires
/// a_k, c_k > 0 and m > 0 or m <= -1.
SubstitutionResult substitute_corollary23(const std::vector<Rational>& a, const std::vector<Rational>& c,
                                          const Rational& m, const CertifyOptions& options = {});

/// a^n/(b+c) + b^n/(c+a) + c^n/(a+b) >= (2/3)^(n-2) S^(n-1), 2S = a+b+c.
/// Throws NotATriangle, DomainError("n < 1"). Non-integer n is accepted and
/// flagged in the verdict notes.
Verdict triangle_bound(const Rational& a, const Rational& b, const Rational& c, const Rational& n,
                       const CertifyOptions& options = {});

/// sum a_k^p/(s-a_k)^q >= s^(p-q) / ((n-1)^q n^(p-q-1)) with s = sum a_k,
/// for p >= q+1 >= 1.
Verdict constrained_sum_bound(const std::vector<Rational>& a, const Rational& p, const Rational& q,
                              const CertifyOptions& options = {});

/// x^3/((1+y)(1+z)) + y^3/((1+z)(1+x)) + z^3/((1+x)(1+y)) >= 3/4 for
/// positive x, y, z with xyz = 1. Throws ProductNotOne.
Verdict unit_product_bound(const Rational& x, const Rational& y, const Rational& z,
                           const CertifyOptions& options = {});

}  // namespace ineqcert
