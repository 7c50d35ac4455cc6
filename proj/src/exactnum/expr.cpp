#include "ineqcert/expr.hpp"

#include <stdexcept>

#include "ineqcert/errors.hpp"

namespace ineqcert {

struct Expr::Node {
  Kind kind;
  Rational value;  // constant value or power exponent
  std::vector<Expr> children;
};

Expr Expr::constant(const Rational& value) {
  return Expr(std::make_shared<const Node>(Node{Kind::Constant, value, {}}));
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) return constant(Rational(0));
  return Expr(std::make_shared<const Node>(Node{Kind::Sum, Rational(0), std::move(terms)}));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return constant(Rational(1));
  return Expr(std::make_shared<const Node>(Node{Kind::Product, Rational(1), std::move(factors)}));
}

Expr Expr::quotient(Expr numerator, Expr denominator) {
  return Expr(std::make_shared<const Node>(
      Node{Kind::Quotient, Rational(1), {std::move(numerator), std::move(denominator)}}));
}

Expr Expr::power(Expr base, const Rational& exponent) {
  return Expr(std::make_shared<const Node>(Node{Kind::Power, exponent, {std::move(base)}}));
}

Expr::Kind Expr::kind() const { return node_->kind; }

const Rational& Expr::value() const {
  if (node_->kind != Kind::Constant) throw std::logic_error("Expr::value on non-constant");
  return node_->value;
}

const Rational& Expr::exponent() const {
  if (node_->kind != Kind::Power) throw std::logic_error("Expr::exponent on non-power");
  return node_->value;
}

std::span<const Expr> Expr::children() const { return node_->children; }

std::string Expr::to_string() const {
  auto join = [this](const char* sep) {
    std::string out = "(";
    for (std::size_t i = 0; i < node_->children.size(); ++i) {
      if (i) out += sep;
      out += node_->children[i].to_string();
    }
    return out + ")";
  };
  switch (node_->kind) {
    case Kind::Constant: return node_->value.to_string();
    case Kind::Sum: return join(" + ");
    case Kind::Product: return join(" * ");
    case Kind::Quotient: return join(" / ");
    case Kind::Power: return node_->children[0].to_string() + "^(" + node_->value.to_string() + ")";
  }
  return "?";
}

const char* to_string(Ordering3 ordering) {
  switch (ordering) {
    case Ordering3::Less: return "Less";
    case Ordering3::Equal: return "Equal";
    case Ordering3::Greater: return "Greater";
    case Ordering3::Indeterminate: return "Indeterminate";
  }
  return "?";
}

// ------------------------------------------------------------ evaluation

std::optional<Rational> try_eval_exact(const Expr& tree) {
  switch (tree.kind()) {
    case Expr::Kind::Constant:
      return tree.value();
    case Expr::Kind::Sum: {
      Rational total(0);
      for (const Expr& term : tree.children()) {
        std::optional<Rational> v = try_eval_exact(term);
        if (!v) return std::nullopt;
        total += *v;
      }
      return total;
    }
    case Expr::Kind::Product: {
      Rational total(1);
      bool complete = true;
      bool zero = false;
      for (const Expr& factor : tree.children()) {
        std::optional<Rational> v = try_eval_exact(factor);
        if (!v) {
          complete = false;
        } else {
          zero = zero || v->is_zero();
          total *= *v;
        }
      }
      if (zero) return Rational(0);
      if (!complete) return std::nullopt;
      return total;
    }
    case Expr::Kind::Quotient: {
      std::optional<Rational> num = try_eval_exact(tree.children()[0]);
      std::optional<Rational> den = try_eval_exact(tree.children()[1]);
      if (den && den->is_zero()) throw EvaluationError(EvaluationError::Kind::DivisionByZero);
      if (num && num->is_zero()) return Rational(0);
      if (!num || !den) return std::nullopt;
      return *num / *den;
    }
    case Expr::Kind::Power: {
      if (tree.exponent().is_zero()) return Rational(1);
      std::optional<Rational> base = try_eval_exact(tree.children()[0]);
      if (!base) return std::nullopt;
      return exact_pow(*base, tree.exponent());
    }
  }
  return std::nullopt;
}

Rational eval_exact(const Expr& tree) {
  if (!has_only_integer_exponents(tree)) throw EvaluationError(EvaluationError::Kind::NonIntegerExponent);
  std::optional<Rational> value = try_eval_exact(tree);
  if (!value) throw std::logic_error("eval_exact: integer-exponent tree did not evaluate");
  return *value;
}

DyadicInterval enclose(const Expr& tree, unsigned precision) {
  switch (tree.kind()) {
    case Expr::Kind::Constant:
      return DyadicInterval::enclose(tree.value(), precision);
    case Expr::Kind::Sum: {
      DyadicInterval total = DyadicInterval::point(Dyadic(), precision);
      for (const Expr& term : tree.children()) total = total + enclose(term, precision);
      return total;
    }
    case Expr::Kind::Product: {
      DyadicInterval total = DyadicInterval::point(Dyadic(1), precision);
      for (const Expr& factor : tree.children()) total = total * enclose(factor, precision);
      return total;
    }
    case Expr::Kind::Quotient:
      return enclose(tree.children()[0], precision) / enclose(tree.children()[1], precision);
    case Expr::Kind::Power:
      if (tree.exponent().is_zero()) return DyadicInterval::point(Dyadic(1), precision);
      return pow(enclose(tree.children()[0], precision), tree.exponent());
  }
  throw std::logic_error("enclose: unknown node");
}

Comparison compare_detailed(const Expr& lhs, const Expr& rhs, unsigned budget) {
  Comparison out;
  out.lhs_exact = try_eval_exact(lhs);
  out.rhs_exact = try_eval_exact(rhs);
  if (out.lhs_exact && out.rhs_exact) {
    const auto c = *out.lhs_exact <=> *out.rhs_exact;
    out.ordering = c < 0 ? Ordering3::Less : (c > 0 ? Ordering3::Greater : Ordering3::Equal);
    out.lhs = DyadicInterval::enclose(*out.lhs_exact, kStartPrecision);
    out.rhs = DyadicInterval::enclose(*out.rhs_exact, kStartPrecision);
    out.precision_used = kStartPrecision;
    return out;
  }
  for (unsigned precision = kStartPrecision; precision <= budget; precision *= 2) {
    try {
      DyadicInterval l = enclose(lhs, precision);
      DyadicInterval r = enclose(rhs, precision);
      out.precision_used = precision;
      out.lhs = l;
      out.rhs = r;
      if (l.hi() < r.lo()) {
        out.ordering = Ordering3::Less;
        return out;
      }
      if (l.lo() > r.hi()) {
        out.ordering = Ordering3::Greater;
        return out;
      }
    } catch (const EnclosureUnbounded&) {
      out.precision_used = precision;
    }
  }
  out.ordering = Ordering3::Indeterminate;
  return out;
}

Ordering3 compare_certified(const Expr& lhs, const Expr& rhs, unsigned budget) {
  return compare_detailed(lhs, rhs, budget).ordering;
}

// -------------------------------------------------------- tree utilities

bool has_only_integer_exponents(const Expr& tree) {
  if (tree.kind() == Expr::Kind::Power && !tree.exponent().is_integer()) return false;
  for (const Expr& child : tree.children()) {
    if (!has_only_integer_exponents(child)) return false;
  }
  return true;
}

bool is_structurally_nonnegative(const Expr& tree) {
  if (tree.kind() == Expr::Kind::Constant) return tree.value().sign() >= 0;
  for (const Expr& child : tree.children()) {
    if (!is_structurally_nonnegative(child)) return false;
  }
  return true;
}

BigInt exponent_denominator_lcm(const Expr& tree) {
  BigInt result = 1;
  if (tree.kind() == Expr::Kind::Power) result = tree.exponent().denominator();
  for (const Expr& child : tree.children()) {
    const BigInt sub = exponent_denominator_lcm(child);
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), sub.get_mpz_t());
  }
  return result;
}

Expr raise_to_power(const Expr& tree, const BigInt& d) {
  if (d == 1) return tree;
  switch (tree.kind()) {
    case Expr::Kind::Constant:
      return Expr::constant(tree.value().pow(d));
    case Expr::Kind::Sum:
      if (tree.children().size() == 1) return raise_to_power(tree.children()[0], d);
      return Expr::power(tree, Rational(d));
    case Expr::Kind::Product: {
      std::vector<Expr> factors;
      factors.reserve(tree.children().size());
      for (const Expr& factor : tree.children()) factors.push_back(raise_to_power(factor, d));
      return Expr::product(std::move(factors));
    }
    case Expr::Kind::Quotient:
      return Expr::quotient(raise_to_power(tree.children()[0], d), raise_to_power(tree.children()[1], d));
    case Expr::Kind::Power: {
      const Rational e = tree.exponent() * Rational(d);
      const Expr& base = tree.children()[0];
      if (e.is_zero()) return Expr::constant(Rational(1));
      if (e.is_integer() && e.sign() > 0) return raise_to_power(base, e.numerator());
      if (e.is_integer()) return Expr::quotient(Expr::constant(Rational(1)), raise_to_power(base, -e.numerator()));
      return Expr::power(base, e);
    }
  }
  throw std::logic_error("raise_to_power: unknown node");
}

}  // namespace ineqcert
