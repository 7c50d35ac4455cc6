#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ineqcert {

using BigInt = mpz_class;

/// Exact signed fraction in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1 after every operation.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer);
  /// Throws EvaluationError(DivisionByZero) when `denominator` is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q" or "p": decimal digits, optional leading '-', q > 0.
  /// Throws ParseError with a 1-based column on malformed input.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// True when the denominator is a power of two.
  bool is_dyadic() const;

  Rational abs() const;
  Rational reciprocal() const;
  /// Integer power; negative exponents of zero throw ZeroToNegativePower.
  /// 0^0 = 1.
  Rational pow(std::int64_t exponent) const;
  Rational pow(const BigInt& exponent) const;

  /// Exact q-th root when both numerator and denominator are perfect q-th
  /// powers (q >= 1, value >= 0); nullopt otherwise.
  std::optional<Rational> exact_root(unsigned long q) const;

  /// Canonical external form: "p" when the denominator is 1, else "p/q".
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// Floor of log2(|x|) for x != 0, computed exactly.
std::int64_t floor_log2(const Rational& x);

/// Least common multiple of the denominators of `values` (1 when empty).
BigInt denominator_lcm(const auto& values) {
  BigInt result = 1;
  for (const Rational& v : values) {
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.denominator().get_mpz_t());
  }
  return result;
}

}  // namespace ineqcert
