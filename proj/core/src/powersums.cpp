#include "kempner/powersums.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "kempner/errors.hpp"

namespace kempner {

namespace {

void require_base(long b) {
  if (b < 2) throw DomainError("base must be >= 2, got " + std::to_string(b));
}

void require_exponent(int j) {
  if (j < 0) throw DomainError("exponent must be >= 0, got " + std::to_string(j));
}

class BernoulliCache {
 public:
  ExactRational get(int n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < values_.size()) return values_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    // sum_{p=0}^{k} C(k+1, p) B_p = 0
    while (values_.size() <= static_cast<std::size_t>(n)) {
      const auto k = static_cast<unsigned long>(values_.size());
      ExactRational acc = 0;
      for (unsigned long p = 0; p < k; ++p) {
        if (values_[p] != 0) acc += ExactRational(binomial(k + 1, p)) * values_[p];
      }
      values_.push_back(-acc / ExactRational(static_cast<long>(k + 1)));
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<ExactRational> values_{ExactRational(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

constexpr long kDirectSummationBudget = 1'000'000;

}  // namespace

ExactRational bernoulli(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be >= 0");
  return bernoulli_cache().get(n);
}

ExactRational power_sum_direct(long b, int j) {
  require_base(b);
  require_exponent(j);
  BigInt sum = 0, term;
  for (unsigned long d = 1; d < static_cast<unsigned long>(b); ++d) {
    mpz_ui_pow_ui(term.get_mpz_t(), d, static_cast<unsigned long>(j));
    sum += term;
  }
  return ExactRational(sum);
}

ExactRational power_sum_closed_form(long b, int j) {
  require_base(b);
  if (j < 1) throw DomainError("closed form needs j >= 1 (gamma_0 = b - 1)");
  // sum_{p=0}^{j} C(j,p) B_p b^{j+1-p} / (j+1-p)
  ExactRational sum = 0;
  BigInt power;
  for (int p = 0; p <= j; ++p) {
    const ExactRational bp = bernoulli(p);
    if (bp == 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(b),
                  static_cast<unsigned long>(j + 1 - p));
    sum += ExactRational(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(p))) *
           bp * ExactRational(power) / ExactRational(j + 1 - p);
  }
  return sum;
}

ExactRational power_sum(long b, int j) {
  require_base(b);
  require_exponent(j);
  if (j == 0) return ExactRational(b - 1);
  if (b <= kDirectSummationBudget / j) return power_sum_direct(b, j);
  return power_sum_closed_form(b, j);
}

ExactRational ScaledPolynomial::evaluate(const ExactRational& c) const {
  ExactRational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * c + *it;
  return acc;
}

ScaledPolynomial scaled_power_sum_poly(int j) {
  if (j < 1) throw DomainError("scaled power-sum polynomial needs j >= 1");
  ScaledPolynomial poly;
  poly.j = j;
  poly.coeffs.reserve(static_cast<std::size_t>(j) + 1);
  for (int p = 0; p <= j; ++p) {
    poly.coeffs.push_back(
        ExactRational(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(p))) *
        bernoulli(p) / ExactRational(j + 1 - p));
  }
  return poly;
}

bool check_identity_8(long b, int m) {
  require_base(b);
  if (m < 0) throw DomainError("m must be >= 0");
  const ExactRational c(1, b);
  ExactRational sum = 0;
  for (int j = 0; j <= m; ++j) {
    sum += ExactRational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j))) *
           power_sum(b, j) / ExactRational(m + 1 - j);
  }
  ExactRational c_pow = 1;
  for (int i = 0; i <= m; ++i) c_pow *= c;
  return c_pow * sum == (1 - c_pow) / ExactRational(m + 1);
}

bool check_power_sum_bounds(long b, int j) {
  require_base(b);
  if (j < 1) throw DomainError("bounds are stated for j >= 1");
  const ExactRational c(1, b);
  ExactRational c_pow = 1;
  for (int i = 0; i <= j; ++i) c_pow *= c;
  const ExactRational scaled = c_pow * power_sum(b, j);
  const ExactRational lower = ExactRational(1, j + 1) - c / 2;
  const ExactRational upper = lower + ExactRational(j) * c * c / 12;
  return lower <= scaled && scaled <= upper;
}

}  // namespace kempner
