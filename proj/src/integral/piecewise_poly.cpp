#include "ineqcert/piecewise_poly.hpp"

#include <algorithm>
#include <utility>

namespace ineqcert {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * Rational(static_cast<std::int64_t>(k)));
  }
  return Polynomial(std::move(out));
}

Rational Polynomial::integral(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> anti{Rational(0)};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    anti.push_back(coeffs_[k] / Rational(static_cast<std::int64_t>(k + 1)));
  }
  const Polynomial antiderivative(std::move(anti));
  return antiderivative(hi) - antiderivative(lo);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial out({Rational(1)});
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

namespace {

RationalRange hull(const Rational& a, const Rational& b) { return a <= b ? RationalRange{a, b} : RationalRange{b, a}; }

RationalRange mul(const RationalRange& x, const RationalRange& y) {
  const Rational p[] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}

RationalRange horner(const Polynomial& p, const Rational& lo, const Rational& hi) {
  RationalRange acc{Rational(0), Rational(0)};
  const RationalRange x{lo, hi};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, x);
    acc.lo = acc.lo + *it;
    acc.hi = acc.hi + *it;
  }
  return acc;
}

}  // namespace

RationalRange range(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 1) return hull(p(lo), p(hi));
  const RationalRange slope = range(p.derivative(), lo, hi);
  if (slope.lo.sign() >= 0 || slope.hi.sign() <= 0) return hull(p(lo), p(hi));
  return horner(p, lo, hi);
}

PiecewisePoly::PiecewisePoly(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw DomainError("at least one segment");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].lo < segments_[i].hi)) throw DomainError("segment lo < hi");
    if (i > 0 && segments_[i - 1].hi != segments_[i].lo) throw DomainError("segments contiguous");
  }
}

PiecewisePoly PiecewisePoly::constant(const Rational& value, const Rational& lo, const Rational& hi) {
  return PiecewisePoly({Segment{lo, hi, Polynomial({value})}});
}

bool PiecewisePoly::covers(const Rational& lo, const Rational& hi) const {
  return this->lo() <= lo && hi <= this->hi();
}

const Polynomial& PiecewisePoly::piece(const Rational& lo, const Rational& hi) const {
  for (const Segment& s : segments_) {
    if (s.lo <= lo && hi <= s.hi) return s.poly;
  }
  throw DomainError("interval within one segment", "[" + lo.to_string() + ", " + hi.to_string() + "]");
}

Rational PiecewisePoly::integral(const Rational& lo, const Rational& hi) const {
  if (!covers(lo, hi)) throw DomainError("interval within function domain");
  Rational total(0);
  for (const Segment& s : segments_) {
    const Rational u = std::max(s.lo, lo);
    const Rational v = std::min(s.hi, hi);
    if (u < v) total = total + s.poly.integral(u, v);
  }
  return total;
}

bool PiecewisePoly::is_constant_on(const Rational& lo, const Rational& hi) const {
  const Polynomial* first = nullptr;
  for (const Segment& s : segments_) {
    if (!(s.lo < hi && lo < s.hi)) continue;
    if (!s.poly.is_constant()) return false;
    if (first != nullptr && !(*first == s.poly)) return false;
    first = &s.poly;
  }
  return true;
}

void certify_positive(const PiecewisePoly& f, const Rational& lo, const Rational& hi, unsigned max_depth) {
  if (!f.covers(lo, hi)) throw DomainError("interval within function domain");
  struct Task {
    Rational lo;
    Rational hi;
    unsigned depth;
  };
  for (const Segment& s : f.segments()) {
    const Rational u = std::max(s.lo, lo);
    const Rational v = std::min(s.hi, hi);
    if (v < u) continue;
    std::vector<Task> stack{{u, v, 0}};
    while (!stack.empty()) {
      Task t = std::move(stack.back());
      stack.pop_back();
      if (s.poly(t.lo).sign() <= 0 || s.poly(t.hi).sign() <= 0) throw NotCertified(t.lo, t.hi);
      if (range(s.poly, t.lo, t.hi).lo.sign() > 0) continue;
      if (t.depth >= max_depth) throw NotCertified(t.lo, t.hi);
      const Rational mid = (t.lo + t.hi) / Rational(2);
      stack.push_back({mid, t.hi, t.depth + 1});
      stack.push_back({t.lo, mid, t.depth + 1});
    }
  }
}

}  // namespace ineqcert
