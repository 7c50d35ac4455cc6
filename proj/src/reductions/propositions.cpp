#include <algorithm>

#include "ineqcert/errors.hpp"
#include "ineqcert/expr.hpp"
#include "ineqcert/reductions.hpp"

namespace ineqcert {

namespace {

Expr c(const Rational& x) { return Expr::constant(x); }

}  // namespace

Verdict triangle_bound(const Rational& a, const Rational& b, const Rational& cc, const Rational& n,
                       const CertifyOptions& options) {
  if (a.sign() <= 0 || b.sign() <= 0 || cc.sign() <= 0) throw NotATriangle();
  if (!(a < b + cc && b < cc + a && cc < a + b)) throw NotATriangle();
  if (n < Rational(1)) throw DomainError("n < 1");
  const Rational half_perimeter = (a + b + cc) / Rational(2);
  const Expr lhs = pow(c(a), n) / c(b + cc) + pow(c(b), n) / c(cc + a) + pow(c(cc), n) / c(a + b);
  const Expr rhs = pow(c(Rational(2, 3)), n - Rational(2)) * pow(c(half_perimeter), n - Rational(1));
  Verdict verdict = certify(lhs, rhs, Relation::GreaterEqual, a == b && b == cc, options);
  if (!n.is_integer()) verdict.notes.push_back("n = " + n.to_string() + " is not an integer");
  return verdict;
}

Verdict constrained_sum_bound(const std::vector<Rational>& a, const Rational& p, const Rational& q,
                              const CertifyOptions& options) {
  if (a.empty()) throw DomainError("n >= 1");
  for (const Rational& x : a) {
    if (x.sign() <= 0) throw DomainError("a_k > 0");
  }
  const Rational s = total(a);
  for (const Rational& x : a) {
    if (!(x < s)) throw DomainError("s - a_k <= 0");
  }
  if (q.sign() < 0) throw DomainError("q < 0");
  if (p < q + Rational(1)) throw DomainError("p < q+1");
  const Rational n(static_cast<std::int64_t>(a.size()));
  std::vector<Expr> terms;
  for (const Rational& x : a) terms.push_back(pow(c(x), p) / pow(c(s - x), q));
  const Expr rhs = pow(c(s), p - q) / (pow(c(n - Rational(1)), q) * pow(c(n), p - q - Rational(1)));
  return certify(Expr::sum(std::move(terms)), rhs, Relation::GreaterEqual, is_constant(a), options);
}

Verdict unit_product_bound(const Rational& x, const Rational& y, const Rational& z, const CertifyOptions& options) {
  if (x.sign() <= 0 || y.sign() <= 0 || z.sign() <= 0) throw DomainError("x, y, z > 0");
  if (x * y * z != Rational(1)) throw ProductNotOne();
  const Rational one(1);
  auto term = [&](const Rational& u, const Rational& v, const Rational& w) {
    return pow(c(u), 3) / (c(one + v) * c(one + w));
  };
  const Expr lhs = term(x, y, z) + term(y, z, x) + term(z, x, y);
  return certify(lhs, c(Rational(3, 4)), Relation::GreaterEqual, x == y && y == z, options);
}

}  // namespace ineqcert
