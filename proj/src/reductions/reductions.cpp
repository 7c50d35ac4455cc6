#include "ineqcert/reductions.hpp"

#include <stdexcept>

#include "ineqcert/errors.hpp"
#include "ineqcert/expr.hpp"

namespace ineqcert {

namespace {

Expr c(const Rational& x) { return Expr::constant(x); }

// Compares two term trees exactly. Returns false when either side has no
// rational value; throws when both do and they differ.
bool same_value(const Expr& lhs, const Expr& rhs) {
  const std::optional<Rational> l = try_eval_exact(lhs);
  const std::optional<Rational> r = try_eval_exact(rhs);
  if (!l || !r) return false;
  if (*l != *r) {
    throw std::logic_error("reduction identity failed: " + lhs.to_string() + " != " + rhs.to_string());
  }
  return true;
}

void require_positive(const std::vector<Rational>& v, const char* predicate) {
  for (const Rational& x : v) {
    if (x.sign() <= 0) throw DomainError(predicate);
  }
}

void require_nonnegative(const std::vector<Rational>& v, const char* predicate) {
  for (const Rational& x : v) {
    if (x.sign() < 0) throw DomainError(predicate);
  }
}

void require_same_length(std::size_t n, std::size_t m) {
  if (n == 0) throw DomainError("n >= 1");
  if (n != m) throw DomainError("length(a) == length(b)");
}

}  // namespace

ReductionRecord radon_to_powermean(const std::vector<Rational>& p, const std::vector<Rational>& y,
                                   const Rational& r, const Rational& s) {
  require_same_length(y.size(), p.size());
  if (s.sign() <= 0) throw DomainError("s <= 0");
  if (r < s) throw DomainError("r < s");
  require_positive(p, "p_k > 0");
  require_nonnegative(y, "y_k >= 0");
  const Rational ratio = r / s;
  const Rational m = ratio - Rational(1);
  ReductionRecord record;
  record.source = InequalityInstance{Family::PowerMean, y, p, {}, {{"r", ratio}, {"s", Rational(1)}}};
  record.target.family = Family::Radon;
  record.target.params = {{"m", m}};
  record.identity_checked = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    record.target.a.push_back(p[k] * y[k]);
    record.target.b.push_back(p[k]);
    const Expr term = c(p[k]) * pow(c(y[k]), ratio);
    const Expr radon_term = pow(c(record.target.a[k]), m + Rational(1)) / pow(c(p[k]), m);
    if (!same_value(term, radon_term)) record.identity_checked = false;
  }
  return record;
}

ReductionRecord radon_to_powermean(const InequalityInstance& power_mean) {
  if (power_mean.family != Family::PowerMean) throw DomainError("family == PowerMean");
  check_structure(power_mean);
  const Rational& s = power_mean.param("s");
  std::vector<Rational> y;
  for (const Rational& x : power_mean.a) {
    if (x.sign() < 0) throw DomainError("x_k >= 0");
    std::optional<Rational> v = exact_pow(x, s);
    if (!v) throw DomainError("x_k^s rational", x.to_string() + "^" + s.to_string());
    y.push_back(*v);
  }
  ReductionRecord record = radon_to_powermean(power_mean.b, y, power_mean.param("r"), s);
  record.source = power_mean;
  return record;
}

ReductionRecord powermean_to_radon(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   const Rational& m) {
  require_same_length(a.size(), b.size());
  if (m.sign() < 0) throw DomainError("m < 0");
  require_positive(b, "b_k > 0");
  require_nonnegative(a, "a_k >= 0");
  const Rational r = m + Rational(1);
  ReductionRecord record;
  record.source = InequalityInstance{Family::Radon, a, b, {}, {{"m", m}}};
  record.target.family = Family::PowerMean;
  record.target.params = {{"r", r}, {"s", Rational(1)}};
  record.target.b = b;
  record.identity_checked = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    record.target.a.push_back(a[k] / b[k]);
    const Expr term = c(b[k]) * pow(c(record.target.a[k]), r);
    const Expr radon_term = pow(c(a[k]), r) / pow(c(b[k]), m);
    if (!same_value(term, radon_term)) record.identity_checked = false;
  }
  return record;
}

ReductionRecord powermean_to_radon(const InequalityInstance& radon) {
  if (radon.family != Family::Radon) throw DomainError("family == Radon");
  check_structure(radon);
  return powermean_to_radon(radon.a, radon.b, radon.param("m"));
}

SubstitutionResult substitute_corollary23(const std::vector<Rational>& a, const std::vector<Rational>& cv,
                                          const Rational& m, const CertifyOptions& options) {
  require_same_length(a.size(), cv.size());
  if (m.sign() <= 0 && m > Rational(-1)) throw DomainError("-1 < m <= 0");
  require_positive(a, "a_k > 0");
  require_positive(cv, "c_k > 0");
  const Rational root = m.reciprocal();
  std::vector<Expr> lhs_terms;
  std::vector<Expr> b_terms;
  std::vector<Expr> a_terms;
  InequalityInstance radon{Family::Radon, a, {}, {}, {{"m", m}}};
  bool rational_b = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    lhs_terms.push_back(c(a[k]) / c(cv[k]));
    a_terms.push_back(c(a[k]));
    b_terms.push_back(c(a[k]) * pow(c(cv[k]), root));
    if (std::optional<Rational> r = exact_pow(cv[k], root)) {
      radon.b.push_back(a[k] * *r);
    } else {
      rational_b = false;
    }
  }
  const Expr lhs = Expr::sum(std::move(lhs_terms));
  const Expr rhs = pow(Expr::sum(std::move(a_terms)), m + Rational(1)) / pow(Expr::sum(std::move(b_terms)), m);
  SubstitutionResult result;
  result.verdict = certify(lhs, rhs, Relation::GreaterEqual, is_constant(cv), options);
  if (rational_b) result.radon = std::move(radon);
  return result;
}

}  // namespace ineqcert
