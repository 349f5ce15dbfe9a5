#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kempner {

using BigInt = mpz_class;

// Exact rational; gmpxx keeps arithmetic results in lowest terms with a
// positive denominator, so value equality is operator==.
using ExactRational = mpq_class;

// Canonical rational num/den. Throws DomainError when den == 0.
ExactRational make_rational(const BigInt& num, const BigInt& den);

// "num/den" in lowest terms, or just "num" for integers.
std::string to_string(const ExactRational& x);
ExactRational parse_rational(std::string_view text);

BigInt pow10(unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);

// Nearest integer to num/den (den != 0), ties to even.
BigInt round_half_even(const BigInt& num, const BigInt& den);
// Smallest integer >= num/den (den > 0).
BigInt ceil_div(const BigInt& num, const BigInt& den);

// Fixed-point decimal: value = scaled / 10^scale.
//
// Addition and subtraction at a common scale are exact. Operations that must
// round (rescaling down, division, products) round half-even, so each one
// contributes at most half a unit in the last place.
class DecimalValue {
 public:
  DecimalValue() = default;
  DecimalValue(BigInt scaled, int scale);

  static DecimalValue from_integer(long value, int scale);
  static DecimalValue from_rational(const ExactRational& x, int scale);
  static DecimalValue parse(std::string_view text);

  const BigInt& scaled() const { return scaled_; }
  int scale() const { return scale_; }
  int sign() const { return sgn(scaled_); }

  // Same value at another scale; rounds half-even when digits are dropped.
  DecimalValue rescaled(int scale) const;
  ExactRational to_rational() const;
  // Exactly scale() fractional digits, plain ASCII, '-' for negatives.
  std::string to_string() const;
  // One unit in the last place, 10^-scale.
  ExactRational ulp() const;

  DecimalValue abs() const;
  DecimalValue operator-() const;

  // Result scale is max of the operand scales; exact.
  friend DecimalValue operator+(const DecimalValue& a, const DecimalValue& b);
  friend DecimalValue operator-(const DecimalValue& a, const DecimalValue& b);
  DecimalValue& operator+=(const DecimalValue& other);
  DecimalValue& operator-=(const DecimalValue& other);

  // Exact scaling by an integer.
  DecimalValue times(const BigInt& factor) const;
  // Rounded to this->scale().
  DecimalValue divided_by(const BigInt& divisor) const;
  // Rounded to max of the operand scales.
  DecimalValue times(const DecimalValue& other) const;

  friend bool operator==(const DecimalValue& a, const DecimalValue& b);
  friend std::strong_ordering operator<=>(const DecimalValue& a, const DecimalValue& b);

 private:
  BigInt scaled_ = 0;
  int scale_ = 0;
};

// |result - x| <= 1/2 * 10^-P, ties to even.
DecimalValue to_decimal(const ExactRational& x, int P);

}  // namespace kempner
