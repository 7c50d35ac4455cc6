#include "ineqcert/inequalities.hpp"

#include <algorithm>

#include "ineqcert/errors.hpp"

namespace ineqcert {

namespace {

Expr c(const Rational& x) { return Expr::constant(x); }

Expr sum_of(const std::vector<Rational>& v) {
  std::vector<Expr> terms;
  terms.reserve(v.size());
  for (const Rational& x : v) terms.push_back(c(x));
  return Expr::sum(std::move(terms));
}

template <typename Term>
Expr sum_over(std::size_t n, Term term) {
  std::vector<Expr> terms;
  terms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) terms.push_back(term(k));
  return Expr::sum(std::move(terms));
}

template <typename Factor>
Expr product_over(std::size_t n, Factor factor) {
  std::vector<Expr> factors;
  factors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) factors.push_back(factor(k));
  return Expr::product(std::move(factors));
}

// Vectors restricted to the indices where `weights` is positive.
std::vector<Rational> on_support(const std::vector<Rational>& v, const std::vector<Rational>& weights) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (weights[k].sign() > 0) out.push_back(v[k]);
  }
  return out;
}

// a^p and b^q proportional, tested exactly on a^(pD), b^(qD) with D the
// common denominator of p and q.
bool powers_proportional(const std::vector<Rational>& a, const Rational& p, const std::vector<Rational>& b,
                         const Rational& q) {
  BigInt d = p.denominator();
  mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.denominator().get_mpz_t());
  const BigInt pd = (p * Rational(d)).numerator();
  const BigInt qd = (q * Rational(d)).numerator();
  std::vector<Rational> u;
  std::vector<Rational> v;
  for (std::size_t k = 0; k < a.size(); ++k) {
    u.push_back(a[k].pow(pd));
    v.push_back(b[k].pow(qd));
  }
  return proportional(u, v);
}

}  // namespace

SidePair build_sides(const InequalityInstance& inst) {
  check_structure(inst);
  const auto& a = inst.a;
  const auto& b = inst.b;
  const std::size_t n = inst.size();
  const Rational one(1);
  switch (inst.family) {
    case Family::Bergstrom:
      return {sum_over(n, [&](std::size_t k) { return pow(c(a[k]), 2) / c(b[k]); }),
              pow(sum_of(a), 2) / sum_of(b)};
    case Family::Radon: {
      const Rational& m = inst.param("m");
      return {sum_over(n, [&](std::size_t k) { return pow(c(a[k]), m + one) / pow(c(b[k]), m); }),
              pow(sum_of(a), m + one) / pow(sum_of(b), m)};
    }
    case Family::RadonGeneral: {
      const Rational& r = inst.param("r");
      const Rational& s = inst.param("s");
      const Expr scale = pow(c(Rational(static_cast<std::int64_t>(n))), r - s - one);
      return {sum_over(n, [&](std::size_t k) { return pow(c(a[k]), r) / pow(c(b[k]), s); }),
              pow(sum_of(a), r) / (scale * pow(sum_of(b), s))};
    }
    case Family::PowerMean: {
      const Rational& r = inst.param("r");
      const Rational& s = inst.param("s");
      auto mean = [&](const Rational& e) {
        return pow(sum_over(n, [&](std::size_t k) { return c(b[k]) * pow(c(a[k]), e); }) / sum_of(b),
                   e.reciprocal());
      };
      return {mean(r), mean(s)};
    }
    case Family::GeoSuperadd: {
      const auto& lambda = inst.w;
      auto geo = [&](auto base) { return product_over(n, [&](std::size_t k) { return pow(base(k), lambda[k]); }); };
      return {geo([&](std::size_t k) { return c(a[k]); }) + geo([&](std::size_t k) { return c(b[k]); }),
              geo([&](std::size_t k) { return c(a[k]) + c(b[k]); }), Relation::LessEqual};
    }
    case Family::Chrystal: {
      const Rational nn(static_cast<std::int64_t>(n));
      return {product_over(n, [&](std::size_t k) { return c(one) + c(a[k]); }),
              pow(c(one) + pow(product_over(n, [&](std::size_t k) { return c(a[k]); }), nn.reciprocal()), nn)};
    }
    case Family::CauchySchwarz:
      return {sum_of(a) * sum_of(b),
              pow(sum_over(n, [&](std::size_t k) { return pow(c(a[k]) * c(b[k]), Rational(1, 2)); }), 2)};
    case Family::Bernoulli: {
      const Rational& x = a[0];
      const Rational& r = inst.param("r");
      return {pow(c(one + x), r), c(one) + c(r) * c(x)};
    }
    case Family::WeightedAMGM:
      return {sum_over(n, [&](std::size_t k) { return c(b[k]) * c(a[k]); }),
              product_over(n, [&](std::size_t k) { return pow(c(a[k]), b[k]); })};
    case Family::Holder: {
      const Rational& p = inst.param("p");
      const Rational& q = inst.param("q");
      auto norm = [&](const std::vector<Rational>& v, const Rational& e) {
        return pow(sum_over(n, [&](std::size_t k) { return pow(c(v[k]), e); }), e.reciprocal());
      };
      return {norm(a, p) * norm(b, q), sum_over(n, [&](std::size_t k) { return c(a[k]) * c(b[k]); })};
    }
    case Family::Minkowski: {
      const Rational& p = inst.param("p");
      auto norm = [&](auto entry) {
        return pow(sum_over(n, [&](std::size_t k) { return pow(entry(k), p); }), p.reciprocal());
      };
      return {norm([&](std::size_t k) { return c(a[k]); }) + norm([&](std::size_t k) { return c(b[k]); }),
              norm([&](std::size_t k) { return c(a[k]) + c(b[k]); })};
    }
  }
  throw std::logic_error("build_sides: unknown family");
}

bool equality_condition_holds(const InequalityInstance& inst) {
  const auto& a = inst.a;
  const auto& b = inst.b;
  const Rational one(1);
  switch (inst.family) {
    case Family::Bergstrom:
    case Family::CauchySchwarz:
      return proportional(a, b);
    case Family::Radon: {
      const Rational& m = inst.param("m");
      return m.is_zero() || m == Rational(-1) || proportional(a, b);
    }
    case Family::RadonGeneral: {
      const Rational& r = inst.param("r");
      const Rational& s = inst.param("s");
      if (a.size() == 1 || (is_constant(a) && is_constant(b))) return true;
      if (s.is_zero() && is_constant(a)) return true;
      if (r.is_zero() && is_constant(b)) return true;
      if (r == s + one) return s.is_zero() || s == Rational(-1) || proportional(a, b);
      return false;
    }
    case Family::PowerMean:
      return inst.param("r") == inst.param("s") || is_constant(a);
    case Family::GeoSuperadd: {
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (inst.w[k].sign() > 0 && a[k].is_zero() && b[k].is_zero()) return true;
      }
      return proportional(on_support(a, inst.w), on_support(b, inst.w));
    }
    case Family::Chrystal:
      return is_constant(a);
    case Family::Bernoulli:
      return a[0].is_zero() || inst.param("r") == one;
    case Family::WeightedAMGM:
      return is_constant(on_support(a, b));
    case Family::Holder:
      return powers_proportional(a, inst.param("p"), b, inst.param("q"));
    case Family::Minkowski:
      return inst.param("p") == one || proportional(a, b);
  }
  return false;
}

Verdict check(const InequalityInstance& inst, const CertifyOptions& options) {
  validate_domain(inst);
  if (inst.family == Family::Chrystal) return check_chrystal(inst.a, options);
  const SidePair sides = build_sides(inst);
  return certify(sides.lhs, sides.rhs, sides.relation, equality_condition_holds(inst), options);
}

Verdict evaluate_unchecked(const InequalityInstance& inst, const CertifyOptions& options) {
  const SidePair sides = build_sides(inst);
  return certify(sides.lhs, sides.rhs, sides.relation, false, options);
}

Verdict check_bergstrom(const std::vector<Rational>& x, const std::vector<Rational>& y,
                        const CertifyOptions& options) {
  return check(InequalityInstance{Family::Bergstrom, x, y, {}, {}}, options);
}

Verdict check_radon(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& m,
                    const CertifyOptions& options) {
  return check(InequalityInstance{Family::Radon, a, b, {}, {{"m", m}}}, options);
}

Verdict check_radon_general(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& r,
                            const Rational& s, const CertifyOptions& options) {
  return check(InequalityInstance{Family::RadonGeneral, a, b, {}, {{"r", r}, {"s", s}}}, options);
}

Verdict check_power_mean(const std::vector<Rational>& p, const std::vector<Rational>& x, const Rational& r,
                         const Rational& s, const CertifyOptions& options) {
  return check(InequalityInstance{Family::PowerMean, x, p, {}, {{"r", r}, {"s", s}}}, options);
}

Verdict check_geo_superadd(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const std::vector<Rational>& lambda, const CertifyOptions& options) {
  return check(InequalityInstance{Family::GeoSuperadd, a, b, lambda, {}}, options);
}

Verdict check_chrystal(const std::vector<Rational>& a, const CertifyOptions& options) {
  const InequalityInstance inst{Family::Chrystal, a, {}, {}, {}};
  validate_domain(inst);
  const std::size_t n = a.size();
  const Rational weight = Rational(1, static_cast<long>(n));
  const Verdict geo = check_geo_superadd(a, std::vector<Rational>(n, Rational(1)),
                                         std::vector<Rational>(n, weight), options);
  const SidePair sides = build_sides(inst);
  Verdict v = certify(sides.lhs, sides.rhs, sides.relation, geo.outcome == Outcome::EqualityCertified, options);
  if (v.outcome != Outcome::Indeterminate && geo.outcome != Outcome::Indeterminate &&
      v.outcome != geo.outcome) {
    throw std::logic_error("check_chrystal: outcome disagrees with the superadditivity instance");
  }
  return v;
}

Verdict check_cauchy_schwarz(const std::vector<Rational>& a, const std::vector<Rational>& b,
                             const CertifyOptions& options) {
  return check(InequalityInstance{Family::CauchySchwarz, a, b, {}, {}}, options);
}

Verdict check_companion(Family family, InequalityInstance inst, const CertifyOptions& options) {
  if (family != Family::Bernoulli && family != Family::WeightedAMGM && family != Family::Holder &&
      family != Family::Minkowski) {
    throw DomainError("companion family must be Bernoulli, WeightedAMGM, Holder or Minkowski");
  }
  inst.family = family;
  return check(inst, options);
}

}  // namespace ineqcert
