#include "ineqcert/dyadic.hpp"

#include <cmath>

#include "ineqcert/errors.hpp"

namespace ineqcert {

namespace {

std::int64_t bit_length(const BigInt& m) {
  return static_cast<std::int64_t>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

BigInt shifted_left(const BigInt& m, std::int64_t bits) {
  BigInt out;
  mpz_mul_2exp(out.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return out;
}

// Floor division toward -inf.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const mp_bitcnt_t zeros = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (zeros > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), zeros);
    exponent_ += static_cast<std::int64_t>(zeros);
  }
}

Rational Dyadic::to_rational() const {
  if (exponent_ >= 0) return Rational(shifted_left(mantissa_, exponent_));
  return Rational(mantissa_, shifted_left(BigInt(1), -exponent_));
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long exp = 0;
  const double frac = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
  return std::ldexp(frac, static_cast<int>(exp + exponent_));
}

std::string Dyadic::to_string() const {
  return mantissa_.get_str(10) + "*2^" + std::to_string(exponent_);
}

Dyadic Dyadic::parse(const std::string& text) {
  const auto star = text.find("*2^");
  if (star == std::string::npos) throw ParseError("malformed dyadic \"" + text + "\"");
  try {
    BigInt mantissa(text.substr(0, star), 10);
    const std::int64_t exponent = std::stoll(text.substr(star + 3));
    return Dyadic(std::move(mantissa), exponent);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed dyadic \"" + text + "\"");
  }
}

Dyadic Dyadic::round_down(unsigned bits) const {
  const std::int64_t length = bit_length(mantissa_);
  if (length <= static_cast<std::int64_t>(bits)) return *this;
  const auto shift = static_cast<mp_bitcnt_t>(length - bits);
  BigInt m;
  mpz_fdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), shift);
  return Dyadic(std::move(m), exponent_ + static_cast<std::int64_t>(shift));
}

Dyadic Dyadic::round_up(unsigned bits) const {
  const std::int64_t length = bit_length(mantissa_);
  if (length <= static_cast<std::int64_t>(bits)) return *this;
  const auto shift = static_cast<mp_bitcnt_t>(length - bits);
  BigInt m;
  mpz_cdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), shift);
  return Dyadic(std::move(m), exponent_ + static_cast<std::int64_t>(shift));
}

namespace {

// Scales x by 2^k and rounds toward -inf (down) or +inf (up).
BigInt scaled_round(const Rational& x, std::int64_t k, bool up) {
  BigInt num = x.numerator();
  BigInt den = x.denominator();
  if (k >= 0) {
    num = shifted_left(num, k);
  } else {
    den = shifted_left(den, -k);
  }
  BigInt q;
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return q;
}

}  // namespace

Dyadic Dyadic::floor(const Rational& x, unsigned bits) {
  if (x.is_zero()) return Dyadic();
  const std::int64_t k = static_cast<std::int64_t>(bits) - floor_log2(x);
  return Dyadic(scaled_round(x, k, false), -k).round_down(bits);
}

Dyadic Dyadic::ceil(const Rational& x, unsigned bits) {
  if (x.is_zero()) return Dyadic();
  const std::int64_t k = static_cast<std::int64_t>(bits) - floor_log2(x);
  return Dyadic(scaled_round(x, k, true), -k).round_up(bits);
}

Dyadic Dyadic::divide_down(const Dyadic& a, const Dyadic& b, unsigned bits) {
  return floor(a.to_rational() / b.to_rational(), bits);
}

Dyadic Dyadic::divide_up(const Dyadic& a, const Dyadic& b, unsigned bits) {
  return ceil(a.to_rational() / b.to_rational(), bits);
}

Dyadic Dyadic::pow(unsigned long exponent) const {
  if (exponent == 0) return Dyadic(1);
  BigInt m;
  mpz_pow_ui(m.get_mpz_t(), mantissa_.get_mpz_t(), exponent);
  return Dyadic(std::move(m), exponent_ * static_cast<std::int64_t>(exponent));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t e = std::min(a.exponent_, b.exponent_);
  return Dyadic(shifted_left(a.mantissa_, a.exponent_ - e) + shifted_left(b.mantissa_, b.exponent_ - e), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same nonzero sign: compare magnitudes by leading bit position first.
  const std::int64_t top_a = a.exponent_ + bit_length(a.mantissa_);
  const std::int64_t top_b = b.exponent_ + bit_length(b.mantissa_);
  if (top_a != top_b) {
    return sa > 0 ? (top_a <=> top_b) : (top_b <=> top_a);
  }
  const int c = sgn(static_cast<BigInt>((a - b).mantissa_));
  return c <=> 0;
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

// -------------------------------------------------------- DyadicInterval

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi, unsigned precision)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(precision) {
  if (hi_ < lo_) throw std::logic_error("DyadicInterval: lo > hi");
}

DyadicInterval DyadicInterval::point(const Dyadic& value, unsigned precision) {
  return DyadicInterval(value, value, precision);
}

DyadicInterval DyadicInterval::enclose(const Rational& x, unsigned precision) {
  return DyadicInterval(Dyadic::floor(x, precision), Dyadic::ceil(x, precision), precision);
}

bool DyadicInterval::contains(const Rational& x) const {
  return lo_.to_rational() <= x && x <= hi_.to_rational();
}

Rational DyadicInterval::midpoint() const { return (lo_ + hi_).to_rational() / Rational(2); }

DyadicInterval DyadicInterval::with_precision(unsigned precision) const {
  return DyadicInterval(lo_.round_down(precision), hi_.round_up(precision), precision);
}

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  const unsigned p = std::max(a.precision_, b.precision_);
  return DyadicInterval((a.lo_ + b.lo_).round_down(p), (a.hi_ + b.hi_).round_up(p), p);
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) { return a + (-b); }

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  const unsigned p = std::max(a.precision_, b.precision_);
  const Dyadic c1 = a.lo_ * b.lo_;
  const Dyadic c2 = a.lo_ * b.hi_;
  const Dyadic c3 = a.hi_ * b.lo_;
  const Dyadic c4 = a.hi_ * b.hi_;
  const Dyadic lo = min(min(c1, c2), min(c3, c4));
  const Dyadic hi = max(max(c1, c2), max(c3, c4));
  return DyadicInterval(lo.round_down(p), hi.round_up(p), p);
}

DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b) {
  if (b.lo_.is_zero() && b.hi_.is_zero()) throw EvaluationError(EvaluationError::Kind::DivisionByZero);
  if (b.contains_zero()) throw EnclosureUnbounded();
  const unsigned p = std::max(a.precision_, b.precision_);
  const Dyadic* nums[2] = {&a.lo_, &a.hi_};
  const Dyadic* dens[2] = {&b.lo_, &b.hi_};
  std::optional<Dyadic> lo;
  std::optional<Dyadic> hi;
  for (const Dyadic* n : nums) {
    for (const Dyadic* d : dens) {
      Dyadic down = Dyadic::divide_down(*n, *d, p);
      Dyadic up = Dyadic::divide_up(*n, *d, p);
      lo = lo ? min(*lo, down) : down;
      hi = hi ? max(*hi, up) : up;
    }
  }
  return DyadicInterval(*lo, *hi, p);
}

// ---------------------------------------------------------------- powers

std::optional<Rational> exact_pow(const Rational& x, const Rational& e) {
  if (e.is_zero()) return Rational(1);
  if (e.is_integer()) return x.pow(e.numerator());
  if (x.sign() < 0) throw EvaluationError(EvaluationError::Kind::NegativeBaseFractionalExponent);
  if (x.is_zero()) {
    if (e.sign() < 0) throw EvaluationError(EvaluationError::Kind::ZeroToNegativePower);
    return Rational(0);
  }
  const BigInt q = e.denominator();
  if (!q.fits_ulong_p()) return std::nullopt;
  return x.pow(e.numerator()).exact_root(q.get_ui());
}

DyadicInterval rat_pow(const Rational& x, const Rational& e, unsigned precision) {
  if (std::optional<Rational> exact = exact_pow(x, e)) {
    // Two guard bits keep the width within 2^-precision relative.
    return DyadicInterval(Dyadic::floor(*exact, precision + 2), Dyadic::ceil(*exact, precision + 2), precision);
  }
  // Irrational x^(p/q) with x > 0: bracket the q-th root of y = x^p by the
  // integer root of floor(y * 2^(qk)).
  const Rational y = x.pow(e.numerator());
  const std::int64_t q = static_cast<std::int64_t>(e.denominator().get_ui());
  const std::int64_t target_bits = static_cast<std::int64_t>(precision) + 3;
  const std::int64_t k = target_bits - floor_div(floor_log2(y), q);
  BigInt num = y.numerator();
  BigInt den = y.denominator();
  if (k >= 0) {
    num = shifted_left(num, q * k);
  } else {
    den = shifted_left(den, -q * k);
  }
  BigInt scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  BigInt root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(q));
  return DyadicInterval(Dyadic(root, -k), Dyadic(root + 1, -k), precision);
}

DyadicInterval pow(const DyadicInterval& base, const Rational& e) {
  const unsigned p = base.precision();
  if (e.is_zero()) return DyadicInterval::point(Dyadic(1), p);
  if (e.is_integer()) {
    const BigInt n = abs(e.numerator());
    if (!n.fits_ulong_p()) throw std::length_error("pow: exponent too large");
    const unsigned long k = n.get_ui();
    const Dyadic a = base.lo().pow(k);
    const Dyadic b = base.hi().pow(k);
    DyadicInterval positive;
    if (k % 2 == 1 || base.lo().sign() >= 0) {
      positive = DyadicInterval(a.round_down(p), b.round_up(p), p);
    } else if (base.hi().sign() <= 0) {
      positive = DyadicInterval(b.round_down(p), a.round_up(p), p);
    } else {
      positive = DyadicInterval(Dyadic(), max(a, b).round_up(p), p);
    }
    if (e.sign() > 0) return positive;
    return DyadicInterval::point(Dyadic(1), p) / positive;
  }
  if (base.hi().sign() < 0) throw EvaluationError(EvaluationError::Kind::NegativeBaseFractionalExponent);
  // The base is nonnegative by precondition; a negative lower endpoint is
  // outward-rounding slack.
  const Dyadic lo = base.lo().sign() < 0 ? Dyadic() : base.lo();
  if (e.sign() > 0) {
    return DyadicInterval(rat_pow(lo.to_rational(), e, p).lo(), rat_pow(base.hi().to_rational(), e, p).hi(), p);
  }
  if (lo.is_zero()) {
    if (base.hi().is_zero()) throw EvaluationError(EvaluationError::Kind::ZeroToNegativePower);
    throw EnclosureUnbounded();
  }
  return DyadicInterval(rat_pow(base.hi().to_rational(), e, p).lo(), rat_pow(lo.to_rational(), e, p).hi(), p);
}

}  // namespace ineqcert
