#pragma once

#include <string>

#include <mpfr.h>

#include "kempner/numerics.hpp"

namespace kempner::testing {

inline ExactRational Q(const std::string& text) { return parse_rational(text); }

inline DecimalValue D(const std::string& text) { return DecimalValue::parse(text); }

// pi^power / divisor at `scale` digits, straight from MPFR.
inline DecimalValue pi_power_over(int power, long divisor, int scale) {
  mpfr_t x, ten;
  mpfr_inits2(static_cast<mpfr_prec_t>((scale + 30) * 3.33) + 64, x, ten, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(x, MPFR_RNDN);
  mpfr_pow_ui(x, x, static_cast<unsigned long>(power), MPFR_RNDN);
  mpfr_div_ui(x, x, static_cast<unsigned long>(divisor), MPFR_RNDN);
  mpfr_set_z(ten, pow10(static_cast<unsigned long>(scale)).get_mpz_t(), MPFR_RNDN);
  mpfr_mul(x, x, ten, MPFR_RNDN);
  BigInt scaled;
  mpfr_get_z(scaled.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clears(x, ten, static_cast<mpfr_ptr>(nullptr));
  return DecimalValue(std::move(scaled), scale);
}

inline bool within_units(const DecimalValue& a, const DecimalValue& b, long units, int scale) {
  return (a - b).abs() <= DecimalValue(units, scale);
}

}  // namespace kempner::testing
