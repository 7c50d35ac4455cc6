#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ineqcert/dyadic.hpp"
#include "ineqcert/expr.hpp"

namespace ineqcert {

enum class Outcome { Holds, EqualityCertified, Violated, Indeterminate };

/// Direction asserted by the inequality: lhs >= rhs or lhs <= rhs.
enum class Relation { GreaterEqual, LessEqual };

const char* to_string(Outcome outcome);
const char* to_string(Relation relation);

/// Certified outcome of one inequality instance.
///
/// `margin` encloses (asserted larger side) - (asserted smaller side), so
/// Holds implies margin.lo > 0 (or an exact proof) and Violated implies
/// margin.hi < 0 regardless of the relation.
struct Verdict {
  Outcome outcome = Outcome::Indeterminate;
  Relation relation = Relation::GreaterEqual;
  DyadicInterval lhs;
  DyadicInterval rhs;
  DyadicInterval margin;
  unsigned precision_used = 0;
  std::optional<Rational> lhs_exact;
  std::optional<Rational> rhs_exact;
  std::vector<std::string> notes;

  std::optional<Rational> margin_exact() const;
  bool holds() const { return outcome == Outcome::Holds || outcome == Outcome::EqualityCertified; }
};

/// Sign of the certified margin: +1, 0 (equality), -1; nullopt when
/// Indeterminate.
std::optional<int> margin_sign(const Verdict& verdict);

struct CertifyOptions {
  unsigned precision_budget = kDefaultPrecisionBudget;
  /// Evaluate both sides exactly when every power is rational.
  bool exact_path = true;
  /// Compare lhs^d with rhs^d, d the common exponent denominator, when both
  /// sides are nonnegative and the lifted trees have integer exponents.
  bool power_lifting = true;
};

/// Decides `lhs relation rhs`. A true `equality_witness` (a symbolic
/// equality condition that the caller proved for this instance) yields
/// EqualityCertified; otherwise equality is only concluded exactly.
Verdict certify(const Expr& lhs, const Expr& rhs, Relation relation, bool equality_witness,
                const CertifyOptions& options = {});

}  // namespace ineqcert
