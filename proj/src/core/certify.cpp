#include "ineqcert/verdict.hpp"

#include "ineqcert/errors.hpp"

namespace ineqcert {

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: return "Holds";
    case Outcome::EqualityCertified: return "EqualityCertified";
    case Outcome::Violated: return "Violated";
    case Outcome::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(Relation relation) { return relation == Relation::GreaterEqual ? ">=" : "<="; }

std::optional<Rational> Verdict::margin_exact() const {
  if (!lhs_exact || !rhs_exact) return std::nullopt;
  return relation == Relation::GreaterEqual ? *lhs_exact - *rhs_exact : *rhs_exact - *lhs_exact;
}

std::optional<int> margin_sign(const Verdict& verdict) {
  switch (verdict.outcome) {
    case Outcome::Holds: return 1;
    case Outcome::EqualityCertified: return 0;
    case Outcome::Violated: return -1;
    case Outcome::Indeterminate: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

class Certifier {
 public:
  Certifier(const Expr& lhs, const Expr& rhs, Relation relation, const CertifyOptions& options)
      : lhs_(lhs), rhs_(rhs), options_(options) {
    verdict_.relation = relation;
  }

  Verdict run(bool equality_witness) {
    if (options_.exact_path && try_exact()) return verdict_;
    if (equality_witness) {
      verdict_.outcome = Outcome::EqualityCertified;
      refine_until([](const Verdict&) { return true; });
      return verdict_;
    }
    if (options_.power_lifting && try_lifting()) return verdict_;
    refine_until([](const Verdict& v) { return v.margin.lo().sign() > 0 || v.margin.hi().sign() < 0; });
    if (verdict_.margin.lo().sign() > 0) {
      verdict_.outcome = Outcome::Holds;
    } else if (verdict_.margin.hi().sign() < 0) {
      verdict_.outcome = Outcome::Violated;
    } else {
      verdict_.outcome = Outcome::Indeterminate;
    }
    return verdict_;
  }

 private:
  bool greater_equal() const { return verdict_.relation == Relation::GreaterEqual; }

  bool try_exact() {
    std::optional<Rational> l = try_eval_exact(lhs_);
    std::optional<Rational> r = try_eval_exact(rhs_);
    if (!l || !r) return false;
    verdict_.lhs_exact = l;
    verdict_.rhs_exact = r;
    const Rational margin = *verdict_.margin_exact();
    verdict_.outcome = margin.sign() > 0 ? Outcome::Holds
                                         : (margin.sign() == 0 ? Outcome::EqualityCertified : Outcome::Violated);
    verdict_.lhs = DyadicInterval::enclose(*l, kStartPrecision);
    verdict_.rhs = DyadicInterval::enclose(*r, kStartPrecision);
    verdict_.margin = DyadicInterval::enclose(margin, kStartPrecision);
    verdict_.precision_used = kStartPrecision;
    return true;
  }

  // A side usable for lifting: structurally nonnegative, or exactly known
  // and nonnegative (replaced by its value).
  static std::optional<Expr> nonnegative_side(const Expr& side) {
    if (is_structurally_nonnegative(side)) return side;
    std::optional<Rational> value = try_eval_exact(side);
    if (value && value->sign() >= 0) return Expr::constant(*value);
    return std::nullopt;
  }

  bool try_lifting() {
    std::optional<Expr> l = nonnegative_side(lhs_);
    std::optional<Expr> r = nonnegative_side(rhs_);
    if (!l || !r) return false;
    BigInt d = exponent_denominator_lcm(*l);
    const BigInt dr = exponent_denominator_lcm(*r);
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), dr.get_mpz_t());
    if (d == 1 || mpz_sizeinbase(d.get_mpz_t(), 2) > 16) return false;
    const Expr lifted_l = raise_to_power(*l, d);
    const Expr lifted_r = raise_to_power(*r, d);
    if (!has_only_integer_exponents(lifted_l) || !has_only_integer_exponents(lifted_r)) return false;
    Rational lv;
    Rational rv;
    try {
      lv = eval_exact(lifted_l);
      rv = eval_exact(lifted_r);
    } catch (const EvaluationError&) {
      return false;
    }
    const auto c = greater_equal() ? (lv <=> rv) : (rv <=> lv);
    verdict_.outcome = c > 0 ? Outcome::Holds : (c == 0 ? Outcome::EqualityCertified : Outcome::Violated);
    verdict_.notes.push_back("decided exactly after raising both sides to the power " + d.get_str());
    if (verdict_.outcome == Outcome::Holds) {
      refine_until([](const Verdict& v) { return v.margin.lo().sign() > 0; });
    } else if (verdict_.outcome == Outcome::Violated) {
      refine_until([](const Verdict& v) { return v.margin.hi().sign() < 0; });
    } else {
      refine_until([](const Verdict&) { return true; });
    }
    return true;
  }

  // Recomputes enclosures at 64, 128, ... bits until `done` or the budget.
  template <typename Done>
  void refine_until(Done done) {
    bool any = false;
    for (unsigned precision = kStartPrecision; precision <= options_.precision_budget; precision *= 2) {
      try {
        verdict_.lhs = enclose(lhs_, precision);
        verdict_.rhs = enclose(rhs_, precision);
      } catch (const EnclosureUnbounded&) {
        continue;
      }
      verdict_.margin = greater_equal() ? verdict_.lhs - verdict_.rhs : verdict_.rhs - verdict_.lhs;
      verdict_.precision_used = precision;
      any = true;
      if (done(verdict_)) return;
    }
    if (!any) throw EnclosureUnbounded();
  }

  const Expr& lhs_;
  const Expr& rhs_;
  const CertifyOptions& options_;
  Verdict verdict_;
};

}  // namespace

Verdict certify(const Expr& lhs, const Expr& rhs, Relation relation, bool equality_witness,
                const CertifyOptions& options) {
  return Certifier(lhs, rhs, relation, options).run(equality_witness);
}

}  // namespace ineqcert
