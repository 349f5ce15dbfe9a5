#include "kempner/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <mpfr.h>

#include "kempner/errors.hpp"
#include "kempner/kempner.hpp"
#include "kempner/powersums.hpp"

namespace kempner {

namespace {

constexpr int kGuardDigits = 5;

int digit_count(long n) { return static_cast<int>(std::to_string(n).size()); }

// |B_{2k}|/(2k)! * s (s+1) ... (s+2k-2) / N^{s+2k-1}, with sign of B_{2k}.
ExactRational em_term(int s, int k, long N) {
  ExactRational t = bernoulli(2 * k);
  BigInt rising = 1, fact = 1;
  for (int i = 0; i <= 2 * k - 2; ++i) rising *= s + i;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k));
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(s + 2 * k - 1));
  t *= ExactRational(rising);
  t /= ExactRational(BigInt(fact * power));
  return t;
}

}  // namespace

DecimalValue zeta_int(int s, int P) {
  if (s < 2) throw DomainError("zeta_int needs s >= 2, got " + std::to_string(s));
  if (P < 0) throw DomainError("negative precision");
  if (P > kMaxPrecision) throw ResourceError("precision exceeds limit");

  const ExactRational target = make_rational(1, pow10(static_cast<unsigned long>(P + 2)));
  long N = std::max(50, P);
  std::vector<ExactRational> corrections;
  // Pick the correction depth; if the asymptotic terms turn upward before the
  // target is reached, move the cut-off N further out.
  for (;;) {
    corrections.clear();
    ExactRational previous = -1;
    bool ok = false;
    for (int k = 1; k < 4 * (P + 20); ++k) {
      ExactRational t = em_term(s, k, N);
      const ExactRational mag = ::abs(t);
      if (mag < target) {
        ok = true;
        break;
      }
      if (previous >= 0 && mag >= previous) break;
      previous = mag;
      corrections.push_back(std::move(t));
    }
    if (ok) break;
    N *= 2;
  }

  const int terms = static_cast<int>(N) + static_cast<int>(corrections.size()) + 2;
  const int work = P + 2 + digit_count(terms);
  DecimalValue sum(0, work);
  BigInt power;
  for (long n = 1; n < N; ++n) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
    sum += DecimalValue::from_rational(make_rational(1, power), work);
  }
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(s));
  // N^{1-s}/(s-1) + N^{-s}/2
  sum += DecimalValue::from_rational(make_rational(BigInt(N), power * (s - 1)), work);
  sum += DecimalValue::from_rational(make_rational(1, power * 2), work);
  for (const auto& t : corrections) sum += DecimalValue::from_rational(t, work);
  return sum.rescaled(P);
}

DecimalValue b_log_b(long b, int scale) {
  if (b < 1) throw DomainError("b_log_b needs b >= 1");
  if (scale < 0) throw DomainError("negative scale");
  const auto bits = static_cast<mpfr_prec_t>(std::ceil((scale + digit_count(b) + 20) * 3.3219280948873623)) + 64;
  mpfr_t x, ten;
  mpfr_inits2(bits, x, ten, static_cast<mpfr_ptr>(nullptr));
  mpfr_log_ui(x, static_cast<unsigned long>(b), MPFR_RNDN);
  mpfr_mul_ui(x, x, static_cast<unsigned long>(b), MPFR_RNDN);
  mpfr_set_z(ten, pow10(static_cast<unsigned long>(scale)).get_mpz_t(), MPFR_RNDN);
  mpfr_mul(x, x, ten, MPFR_RNDN);
  BigInt scaled;
  mpfr_get_z(scaled.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clears(x, ten, static_cast<mpfr_ptr>(nullptr));
  return DecimalValue(std::move(scaled), scale);
}

ExpansionCoefficients expansion_coefficients(int scale) {
  const int work = scale + 3;
  const DecimalValue z2 = zeta_int(2, work), z3 = zeta_int(3, work), z4 = zeta_int(4, work);
  ExpansionCoefficients out;
  out.A = z2.divided_by(2).rescaled(scale);
  out.B = (z2.times(3) + z3).divided_by(3).rescaled(scale);
  out.C = (z2.times(2) + z3.times(4) + z4).divided_by(4).rescaled(scale);
  return out;
}

DecimalValue ExpansionTerms::partial(int nterms) const {
  if (nterms < 0 || nterms > 3) throw DomainError("expansion has 0..3 correction terms");
  DecimalValue out = leading;
  for (int k = 0; k < nterms; ++k) out -= corrections[static_cast<std::size_t>(k)];
  return out;
}

ExpansionTerms expansion_terms(long b, int scale) {
  if (b < 2) throw DomainError("base must be >= 2");
  const ExpansionCoefficients coeffs = expansion_coefficients(scale + 2);
  ExpansionTerms terms;
  terms.base = b;
  terms.leading = b_log_b(b, scale);
  BigInt power = b;
  const DecimalValue* values[] = {&coeffs.A, &coeffs.B, &coeffs.C};
  for (std::size_t k = 0; k < 3; ++k) {
    terms.corrections[k] = values[k]->divided_by(power).rescaled(scale);
    power *= b;
  }
  return terms;
}

DecimalValue expansion(long b, int nterms, int P) {
  if (P < 0) throw DomainError("negative precision");
  return expansion_terms(b, P + kGuardDigits).partial(nterms).rescaled(P);
}

DecimalValue error_ratio(long b, int P) {
  const DecimalValue diff = expansion(b, 3, P) - kempner_sum(b, P).value;
  const BigInt b2 = BigInt(b) * b;
  return diff.times(BigInt(b2 * b2));
}

}  // namespace kempner
