#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ineqcert/rational.hpp"

namespace ineqcert {

/// Exact dyadic rational mantissa * 2^exponent. Normalized so that the
/// mantissa is odd, or zero with exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt mantissa, std::int64_t exponent);
  explicit Dyadic(std::int64_t integer) : Dyadic(BigInt(static_cast<long>(integer)), 0) {}

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  int sign() const noexcept { return sgn(mantissa_); }
  bool is_zero() const noexcept { return sign() == 0; }

  Rational to_rational() const;
  double to_double() const;
  /// External form "mantissa*2^exp".
  std::string to_string() const;
  /// Inverse of to_string.
  static Dyadic parse(const std::string& text);

  /// Directed rounding to at most `bits` significant bits.
  Dyadic round_down(unsigned bits) const;
  Dyadic round_up(unsigned bits) const;

  /// Largest dyadic with at most `bits` significant bits that is <= x
  /// (resp. smallest that is >= x). Exact when x itself fits.
  static Dyadic floor(const Rational& x, unsigned bits);
  static Dyadic ceil(const Rational& x, unsigned bits);

  /// Outward-rounded quotient bounds with `bits` significant bits.
  static Dyadic divide_down(const Dyadic& a, const Dyadic& b, unsigned bits);
  static Dyadic divide_up(const Dyadic& a, const Dyadic& b, unsigned bits);

  Dyadic pow(unsigned long exponent) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt mantissa_{0};
  std::int64_t exponent_ = 0;
};

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

/// Closed interval [lo, hi] with dyadic endpoints; a certified enclosure of
/// a real value. Arithmetic rounds outward to `precision` significant bits.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  DyadicInterval(Dyadic lo, Dyadic hi, unsigned precision);

  static DyadicInterval point(const Dyadic& value, unsigned precision);
  /// Tightest enclosure of x at `precision` bits; degenerate when x is dyadic
  /// and fits.
  static DyadicInterval enclose(const Rational& x, unsigned precision);

  const Dyadic& lo() const noexcept { return lo_; }
  const Dyadic& hi() const noexcept { return hi_; }
  unsigned precision() const noexcept { return precision_; }

  bool is_degenerate() const { return lo_ == hi_; }
  bool contains(const Rational& x) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  Dyadic width() const { return hi_ - lo_; }
  Rational midpoint() const;

  DyadicInterval with_precision(unsigned precision) const;

  friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);
  /// Throws EvaluationError(DivisionByZero) for the divisor [0, 0] and
  /// EnclosureUnbounded when the divisor straddles zero.
  friend DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b);
  DyadicInterval operator-() const { return DyadicInterval(-hi_, -lo_, precision_); }

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
  unsigned precision_ = 64;
};

/// Certified enclosure of x^e for x >= 0 with width at most
/// 2^-precision * max(1, |x^e|). Degenerate when the power is an exactly
/// representable dyadic. Throws NegativeBaseFractionalExponent or
/// ZeroToNegativePower.
DyadicInterval rat_pow(const Rational& x, const Rational& e, unsigned precision);

/// Interval power: encloses { x^e : x in base }. Fractional exponents
/// require a nonnegative base.
DyadicInterval pow(const DyadicInterval& base, const Rational& e);

/// Exact rational power when it exists (integer e, or root extraction
/// succeeds); nullopt when x^e is irrational.
std::optional<Rational> exact_pow(const Rational& x, const Rational& e);

}  // namespace ineqcert
