#include "kempner/numerics.hpp"

#include <algorithm>
#include <cctype>

#include "kempner/errors.hpp"

namespace kempner {

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const ExactRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

ExactRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return ExactRational(BigInt(std::string(text)));
    return make_rational(BigInt(std::string(text.substr(0, slash))),
                         BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational: " + std::string(text));
  }
}

BigInt pow10(unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt round_half_even(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("division by zero");
  BigInt n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const int cmp_half = cmp(BigInt(2 * r), d);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

DecimalValue::DecimalValue(BigInt scaled, int scale) : scaled_(std::move(scaled)), scale_(scale) {
  if (scale < 0) throw DomainError("negative decimal scale");
}

DecimalValue DecimalValue::from_integer(long value, int scale) {
  return DecimalValue(BigInt(value) * pow10(static_cast<unsigned long>(scale)), scale);
}

DecimalValue DecimalValue::from_rational(const ExactRational& x, int scale) {
  if (scale < 0) throw DomainError("negative decimal scale");
  return DecimalValue(round_half_even(x.get_num() * pow10(static_cast<unsigned long>(scale)),
                                      x.get_den()),
                      scale);
}

DecimalValue DecimalValue::parse(std::string_view text) {
  std::string digits;
  bool negative = false;
  int scale = 0;
  bool seen_point = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++scale;
    } else {
      throw DomainError("not a decimal: " + std::string(text));
    }
  }
  if (digits.empty()) throw DomainError("not a decimal: " + std::string(text));
  BigInt scaled(digits);
  if (negative) scaled = -scaled;
  return DecimalValue(std::move(scaled), scale);
}

DecimalValue DecimalValue::rescaled(int scale) const {
  if (scale < 0) throw DomainError("negative decimal scale");
  if (scale >= scale_) {
    return DecimalValue(scaled_ * pow10(static_cast<unsigned long>(scale - scale_)), scale);
  }
  return DecimalValue(round_half_even(scaled_, pow10(static_cast<unsigned long>(scale_ - scale))),
                      scale);
}

ExactRational DecimalValue::to_rational() const {
  return make_rational(scaled_, pow10(static_cast<unsigned long>(scale_)));
}

std::string DecimalValue::to_string() const {
  BigInt magnitude = ::abs(scaled_);
  std::string digits = magnitude.get_str();
  const auto width = static_cast<std::size_t>(scale_) + 1;
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  if (scale_ > 0) digits.insert(digits.size() - static_cast<std::size_t>(scale_), 1, '.');
  if (scaled_ < 0) digits.insert(0, 1, '-');
  return digits;
}

ExactRational DecimalValue::ulp() const {
  return make_rational(1, pow10(static_cast<unsigned long>(scale_)));
}

DecimalValue DecimalValue::abs() const { return DecimalValue(::abs(scaled_), scale_); }

DecimalValue DecimalValue::operator-() const { return DecimalValue(-scaled_, scale_); }

DecimalValue operator+(const DecimalValue& a, const DecimalValue& b) {
  const int s = std::max(a.scale_, b.scale_);
  return DecimalValue(a.rescaled(s).scaled_ + b.rescaled(s).scaled_, s);
}

DecimalValue operator-(const DecimalValue& a, const DecimalValue& b) {
  const int s = std::max(a.scale_, b.scale_);
  return DecimalValue(a.rescaled(s).scaled_ - b.rescaled(s).scaled_, s);
}

DecimalValue& DecimalValue::operator+=(const DecimalValue& other) {
  if (other.scale_ == scale_) {
    scaled_ += other.scaled_;
  } else {
    *this = *this + other;
  }
  return *this;
}

DecimalValue& DecimalValue::operator-=(const DecimalValue& other) {
  if (other.scale_ == scale_) {
    scaled_ -= other.scaled_;
  } else {
    *this = *this - other;
  }
  return *this;
}

DecimalValue DecimalValue::times(const BigInt& factor) const {
  return DecimalValue(scaled_ * factor, scale_);
}

DecimalValue DecimalValue::divided_by(const BigInt& divisor) const {
  return DecimalValue(round_half_even(scaled_, divisor), scale_);
}

DecimalValue DecimalValue::times(const DecimalValue& other) const {
  const int s = std::max(scale_, other.scale_);
  const int drop = scale_ + other.scale_ - s;
  return DecimalValue(
      round_half_even(scaled_ * other.scaled_, pow10(static_cast<unsigned long>(drop))), s);
}

bool operator==(const DecimalValue& a, const DecimalValue& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const DecimalValue& a, const DecimalValue& b) {
  const int s = std::max(a.scale_, b.scale_);
  const int c = cmp(a.rescaled(s).scaled_, b.rescaled(s).scaled_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DecimalValue to_decimal(const ExactRational& x, int P) {
  if (P < 0) throw DomainError("negative precision");
  return DecimalValue::from_rational(x, P);
}

}  // namespace kempner
