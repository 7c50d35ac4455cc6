#include "ineqcert/integral.hpp"

#include <algorithm>

#include "ineqcert/dyadic.hpp"
#include "ineqcert/expr.hpp"

namespace ineqcert {

namespace {

std::vector<Rational> breakpoints(const Integrand& h, const Rational& lo, const Rational& hi, std::size_t partitions) {
  std::vector<Rational> points;
  const Rational n(static_cast<std::int64_t>(partitions));
  for (std::size_t i = 0; i <= partitions; ++i) {
    points.push_back(lo + (hi - lo) * Rational(static_cast<std::int64_t>(i)) / n);
  }
  auto add_segments = [&](const PiecewisePoly& p) {
    for (const Segment& s : p.segments()) {
      if (lo < s.lo && s.lo < hi) points.push_back(s.lo);
    }
  };
  add_segments(h.f);
  if (h.g) add_segments(*h.g);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

void check_positivity(const Integrand& h, const Rational& lo, const Rational& hi, unsigned depth) {
  if (!h.f.covers(lo, hi) || (h.g && !h.g->covers(lo, hi))) throw DomainError("interval within function domain");
  if (h.alpha.sign() < 0 || !h.alpha.is_integer()) certify_positive(h.f, lo, hi, depth);
  if (h.g && !h.beta.is_zero()) certify_positive(*h.g, lo, hi, depth);
}

DyadicInterval piece_range(const Polynomial& p, const Rational& u, const Rational& v, unsigned precision) {
  const RationalRange r = range(p, u, v);
  return DyadicInterval(Dyadic::floor(r.lo, precision), Dyadic::ceil(r.hi, precision), precision);
}

// Closed form of the integral as a tree, available when every piece of the
// integrand is a polynomial times constant powers.
std::optional<Expr> closed_form(const Integrand& h, const Rational& lo, const Rational& hi) {
  std::vector<Expr> terms;
  const std::vector<Rational> points = breakpoints(h, lo, hi, 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rational& u = points[i];
    const Rational& v = points[i + 1];
    Polynomial integrand({Rational(1)});
    std::vector<Expr> factors;
    auto absorb = [&](const Polynomial& p, const Rational& e) {
      if (e.is_zero()) return true;
      if (p.is_constant()) {
        const Rational value = p.coeffs().empty() ? Rational(0) : p.coeffs().front();
        factors.push_back(pow(Expr::constant(value), e));
        return true;
      }
      if (!e.is_integer() || e.sign() < 0 || !e.numerator().fits_uint_p()) return false;
      integrand = integrand * pow(p, static_cast<unsigned>(e.numerator().get_ui()));
      return true;
    };
    if (!absorb(h.f.piece(u, v), h.alpha)) return std::nullopt;
    if (h.g && !absorb(h.g->piece(u, v), -h.beta)) return std::nullopt;
    factors.push_back(Expr::constant(integrand.integral(u, v)));
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

Verdict integral_check(const Integrand& h, const Rational& lo, const Rational& hi, const Expr& rhs, bool witness,
                       const IntegralOptions& options) {
  if (std::optional<Expr> lhs = closed_form(h, lo, hi)) {
    return certify(*lhs, rhs, Relation::GreaterEqual, witness, options.certify);
  }
  const unsigned precision = std::max(options.precision, 64u);
  Verdict verdict;
  verdict.precision_used = precision;
  std::optional<DyadicInterval> rhs_enclosure;
  for (unsigned p = precision; p <= options.certify.precision_budget && !rhs_enclosure; p *= 2) {
    try {
      rhs_enclosure = enclose(rhs, p);
    } catch (const EnclosureUnbounded&) {
    }
  }
  if (!rhs_enclosure) throw EnclosureUnbounded();
  verdict.rhs_exact = try_eval_exact(rhs);
  verdict.rhs = *rhs_enclosure;
  for (std::size_t n = std::max<std::size_t>(options.initial_partitions, 1); n <= options.max_partitions; n *= 2) {
    const RiemannEnclosure e = enclose_integral(h, lo, hi, n, options);
    verdict.lhs = DyadicInterval(Dyadic::floor(e.lower, precision), Dyadic::ceil(e.upper, precision), precision);
    verdict.margin = verdict.lhs - verdict.rhs;
    verdict.notes = {"partitions = " + std::to_string(n)};
    if (witness) {
      verdict.outcome = Outcome::EqualityCertified;
      return verdict;
    }
    if (verdict.margin.lo().sign() > 0) {
      verdict.outcome = Outcome::Holds;
      return verdict;
    }
    if (verdict.margin.hi().sign() < 0) {
      verdict.outcome = Outcome::Violated;
      return verdict;
    }
  }
  verdict.outcome = Outcome::Indeterminate;
  return verdict;
}

// f = lambda g on [lo, hi] for one rational lambda > 0, piece by piece.
bool proportional_on(const PiecewisePoly& f, const PiecewisePoly& g, const Rational& lo, const Rational& hi) {
  Integrand both{f, Rational(1), g, Rational(1)};
  const std::vector<Rational> points = breakpoints(both, lo, hi, 1);
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto& fc = f.piece(points[i], points[i + 1]).coeffs();
    const auto& gc = g.piece(points[i], points[i + 1]).coeffs();
    if (fc.size() != gc.size() || gc.empty()) return false;
    const Rational ratio = fc.back() / gc.back();
    if (lambda && *lambda != ratio) return false;
    lambda = ratio;
    for (std::size_t k = 0; k < fc.size(); ++k) {
      if (fc[k] != ratio * gc[k]) return false;
    }
  }
  return true;
}

void require_interval(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("a < b");
}

}  // namespace

RiemannEnclosure enclose_integral(const Integrand& h, const Rational& lo, const Rational& hi, std::size_t partitions,
                                  const IntegralOptions& options) {
  require_interval(lo, hi);
  if (partitions == 0) throw DomainError("partitions >= 1");
  check_positivity(h, lo, hi, options.positivity_depth);
  const unsigned precision = options.precision;
  const std::vector<Rational> points = breakpoints(h, lo, hi, partitions);
  RiemannEnclosure out{partitions, Rational(0), Rational(0)};
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rational& u = points[i];
    const Rational& v = points[i + 1];
    DyadicInterval value = pow(piece_range(h.f.piece(u, v), u, v, precision), h.alpha);
    if (h.g && !h.beta.is_zero()) value = value / pow(piece_range(h.g->piece(u, v), u, v, precision), h.beta);
    const Rational width = v - u;
    out.lower = out.lower + width * value.lo().to_rational();
    out.upper = out.upper + width * value.hi().to_rational();
  }
  return out;
}

Verdict check_integral_radon(const PiecewisePoly& f, const PiecewisePoly& g, const Rational& lo, const Rational& hi,
                             const Rational& m, const IntegralOptions& options) {
  require_interval(lo, hi);
  if (m.sign() < 0 && m > Rational(-1)) throw DomainError("-1 < m < 0");
  certify_positive(f, lo, hi, options.positivity_depth);
  certify_positive(g, lo, hi, options.positivity_depth);
  const Rational one(1);
  const Expr rhs = pow(Expr::constant(f.integral(lo, hi)), m + one) / pow(Expr::constant(g.integral(lo, hi)), m);
  const bool witness = m.is_zero() || m == Rational(-1) || proportional_on(f, g, lo, hi);
  return integral_check(Integrand{f, m + one, g, m}, lo, hi, rhs, witness, options);
}

Verdict check_integral_radon_general(const PiecewisePoly& f, const PiecewisePoly& g, const Rational& lo,
                                     const Rational& hi, const Rational& r, const Rational& s,
                                     const IntegralOptions& options) {
  require_interval(lo, hi);
  if ((r * s).sign() < 0) throw DomainError("r*s < 0");
  if (r < s + Rational(1)) throw DomainError("r < s+1");
  certify_positive(f, lo, hi, options.positivity_depth);
  certify_positive(g, lo, hi, options.positivity_depth);
  const Rational one(1);
  const Expr rhs = pow(Expr::constant(f.integral(lo, hi)), r) /
                   (pow(Expr::constant(hi - lo), r - s - one) * pow(Expr::constant(g.integral(lo, hi)), s));
  const bool f_constant = f.is_constant_on(lo, hi);
  const bool g_constant = g.is_constant_on(lo, hi);
  bool witness = (f_constant && g_constant) || (s.is_zero() && f_constant) || (r.is_zero() && g_constant);
  if (r == s + one) witness = witness || s.is_zero() || s == Rational(-1) || proportional_on(f, g, lo, hi);
  return integral_check(Integrand{f, r, g, s}, lo, hi, rhs, witness, options);
}

}  // namespace ineqcert
