#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ineqcert/dyadic.hpp"
#include "ineqcert/rational.hpp"

namespace ineqcert {

/// Immutable evaluation tree over Rationals with +, x, / and rational powers.
/// Copies share structure.
class Expr {
 public:
  enum class Kind { Constant, Sum, Product, Quotient, Power };

  Expr() : Expr(constant(Rational(0))) {}
  Expr(const Rational& value) : Expr(constant(value)) {}  // NOLINT(google-explicit-constructor)
  Expr(std::int64_t value) : Expr(constant(Rational(value))) {}  // NOLINT(google-explicit-constructor)

  static Expr constant(const Rational& value);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr quotient(Expr numerator, Expr denominator);
  static Expr power(Expr base, const Rational& exponent);

  Kind kind() const;
  /// Constant value; only valid for Kind::Constant.
  const Rational& value() const;
  /// Power exponent; only valid for Kind::Power.
  const Rational& exponent() const;
  std::span<const Expr> children() const;

  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) { return quotient(a, b); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Expr pow(const Expr& base, const Rational& exponent) { return Expr::power(base, exponent); }

/// Three-valued certified comparison. Equal is only produced by exact
/// arithmetic, never by overlapping enclosures.
enum class Ordering3 { Less, Equal, Greater, Indeterminate };

const char* to_string(Ordering3 ordering);

inline constexpr unsigned kStartPrecision = 64;
inline constexpr unsigned kDefaultPrecisionBudget = 8192;

/// Exact value of a tree whose exponents are all integers.
/// Throws EvaluationError(NonIntegerExponent | DivisionByZero |
/// ZeroToNegativePower).
Rational eval_exact(const Expr& tree);

/// Exact value when every power in the tree is rational (integer exponents
/// or exact roots); nullopt otherwise. A product with an exact zero factor
/// is zero. Domain violations throw EvaluationError.
std::optional<Rational> try_eval_exact(const Expr& tree);

/// Certified enclosure of the tree at `precision` significant bits.
/// Throws EnclosureUnbounded when a divisor cannot be separated from zero.
DyadicInterval enclose(const Expr& tree, unsigned precision);

/// Outcome of compare_certified with the supporting evidence.
struct Comparison {
  Ordering3 ordering = Ordering3::Indeterminate;
  std::optional<DyadicInterval> lhs;
  std::optional<DyadicInterval> rhs;
  unsigned precision_used = 0;
  std::optional<Rational> lhs_exact;
  std::optional<Rational> rhs_exact;
};

/// Exact path first, then interval enclosures at 64, 128, ... bits up to
/// `budget`. Less/Greater only on disjoint enclosures or exact comparison.
Comparison compare_detailed(const Expr& lhs, const Expr& rhs, unsigned budget = kDefaultPrecisionBudget);
Ordering3 compare_certified(const Expr& lhs, const Expr& rhs, unsigned budget = kDefaultPrecisionBudget);

// Tree utilities used by the certification strategies.

bool has_only_integer_exponents(const Expr& tree);
/// All constants are >= 0, hence the value is >= 0 wherever defined.
bool is_structurally_nonnegative(const Expr& tree);
/// Least common multiple of all exponent denominators.
BigInt exponent_denominator_lcm(const Expr& tree);
/// Tree equal in value to tree^d for d >= 1, assuming every power base is
/// nonnegative; powers are pushed through products, quotients and nested
/// powers.
Expr raise_to_power(const Expr& tree, const BigInt& d);

}  // namespace ineqcert
