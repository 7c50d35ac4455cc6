#include "ineqcert/rational.hpp"

#include <cctype>
#include <climits>

#include "ineqcert/errors.hpp"

namespace ineqcert {

namespace {

void require_digits(std::string_view text, std::size_t begin, std::size_t end, std::string_view full) {
  if (begin == end) {
    throw ParseError("malformed rational \"" + std::string(full) + "\": expected digits", 1, begin + 1);
  }
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("malformed rational \"" + std::string(full) + "\": unexpected character", 1, i + 1);
    }
  }
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value >= LONG_MIN && value <= LONG_MAX) {
    value_ = static_cast<long>(value);
  } else {
    value_ = mpq_class(std::to_string(value));
  }
}

Rational::Rational(const BigInt& integer) : value_(integer) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw EvaluationError(EvaluationError::Kind::DivisionByZero);
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) pos = 1;
  const std::size_t slash = text.find('/');
  const std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
  require_digits(text, pos, num_end, text);
  BigInt numerator(std::string(text.substr(pos, num_end - pos)), 10);
  BigInt denominator = 1;
  if (slash != std::string_view::npos) {
    require_digits(text, slash + 1, text.size(), text);
    denominator = BigInt(std::string(text.substr(slash + 1)), 10);
    if (denominator == 0) {
      throw ParseError("malformed rational \"" + std::string(text) + "\": zero denominator", 1, slash + 2);
    }
  }
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

bool Rational::is_dyadic() const {
  const BigInt den = denominator();
  return mpz_popcount(den.get_mpz_t()) == 1;
}

Rational Rational::abs() const { return Rational(::abs(value_)); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw EvaluationError(EvaluationError::Kind::DivisionByZero);
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(std::int64_t exponent) const { return pow(BigInt(std::to_string(exponent))); }

Rational Rational::pow(const BigInt& exponent) const {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (is_zero()) throw EvaluationError(EvaluationError::Kind::ZeroToNegativePower);
    return reciprocal().pow(BigInt(-exponent));
  }
  if (!exponent.fits_ulong_p()) {
    // Only 0, 1 and -1 have representable powers this large.
    if (is_zero() || value_ == 1) return *this;
    if (value_ == -1) return mpz_odd_p(exponent.get_mpz_t()) ? *this : Rational(1);
    throw std::length_error("Rational::pow: exponent too large");
  }
  const unsigned long e = exponent.get_ui();
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  Rational out;
  out.value_ = mpq_class(num, den);  // already canonical: coprime powers
  return out;
}

std::optional<Rational> Rational::exact_root(unsigned long q) const {
  if (q == 0 || sign() < 0) return std::nullopt;
  if (q == 1) return *this;
  BigInt num;
  BigInt den;
  if (mpz_root(num.get_mpz_t(), value_.get_num_mpz_t(), q) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), value_.get_den_mpz_t(), q) == 0) return std::nullopt;
  Rational out;
  out.value_ = mpq_class(num, den);
  return out;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw EvaluationError(EvaluationError::Kind::DivisionByZero);
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(-value_); }

std::int64_t floor_log2(const Rational& x) {
  const BigInt num = abs(x.numerator());
  const BigInt den = x.denominator();
  // 2^(bn-1) <= num < 2^bn and 2^(bd-1) <= den < 2^bd
  auto estimate = static_cast<std::int64_t>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                  static_cast<std::int64_t>(mpz_sizeinbase(den.get_mpz_t(), 2));
  // floor(log2(num/den)) is estimate or estimate - 1.
  BigInt lhs = num;
  BigInt rhs = den;
  if (estimate >= 0) {
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(estimate));
  } else {
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-estimate));
  }
  return lhs >= rhs ? estimate : estimate - 1;
}

}  // namespace ineqcert
