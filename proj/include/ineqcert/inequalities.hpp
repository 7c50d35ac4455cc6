#pragma once

#include <vector>

#include "ineqcert/expr.hpp"
#include "ineqcert/instance.hpp"
#include "ineqcert/verdict.hpp"

namespace ineqcert {

/// Both sides of an instance as evaluation trees, in the orientation the
/// inequality is usually written.
struct SidePair {
  Expr lhs;
  Expr rhs;
  Relation relation = Relation::GreaterEqual;
};

/// Builds the side trees without validating the domain.
SidePair build_sides(const InequalityInstance& inst);

/// The family's symbolic equality condition (proportional vectors,
/// constant vectors, collapsing exponents). Only meaningful on the
/// validity domain.
bool equality_condition_holds(const InequalityInstance& inst);

/// Validates the domain and certifies the instance.
Verdict check(const InequalityInstance& inst, const CertifyOptions& options = {});

/// Certifies the instance without domain validation or symbolic equality
/// conditions; used to probe instances outside the validity domain.
Verdict evaluate_unchecked(const InequalityInstance& inst, const CertifyOptions& options = {});

Verdict check_bergstrom(const std::vector<Rational>& x, const std::vector<Rational>& y,
                        const CertifyOptions& options = {});
Verdict check_radon(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& m,
                    const CertifyOptions& options = {});
Verdict check_radon_general(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& r,
                            const Rational& s, const CertifyOptions& options = {});
Verdict check_power_mean(const std::vector<Rational>& p, const std::vector<Rational>& x, const Rational& r,
                         const Rational& s, const CertifyOptions& options = {});
Verdict check_geo_superadd(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const std::vector<Rational>& lambda, const CertifyOptions& options = {});
/// Reports the sides prod(1+a_k) and (1 + (prod a_k)^(1/n))^n; the equality
/// decision is delegated to the geometric-mean superadditivity instance with
/// b = (1, ..., 1) and lambda = (1/n, ..., 1/n).
Verdict check_chrystal(const std::vector<Rational>& a, const CertifyOptions& options = {});
Verdict check_cauchy_schwarz(const std::vector<Rational>& a, const std::vector<Rational>& b,
                             const CertifyOptions& options = {});
/// Bernoulli, WeightedAMGM, Holder or Minkowski; `inst.family` is
/// overridden by `family`.
Verdict check_companion(Family family, InequalityInstance inst, const CertifyOptions& options = {});

}  // namespace ineqcert
