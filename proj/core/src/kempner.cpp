#include "kempner/kempner.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "kempner/errors.hpp"

namespace kempner {

namespace {

void check_arguments(long b, int P) {
  if (b < 2) throw DomainError("base must be >= 2, got " + std::to_string(b));
  if (P < 1) throw DomainError("precision must be >= 1, got " + std::to_string(P));
  if (P > kMaxPrecision) {
    throw ResourceError("precision " + std::to_string(P) + " exceeds the limit of " +
                        std::to_string(kMaxPrecision) + " digits");
  }
}

int decimal_digits(const BigInt& n) { return static_cast<int>(n.get_str().size()); }

// Floor and ceiling of 10^scale * sum_{d=1}^{b-2} b / (d (d+1)^{M+1}).
struct TailEnclosure {
  BigInt lower;
  BigInt upper;
};

TailEnclosure tail_enclosure(long b, int M, int scale) {
  TailEnclosure out{0, 0};
  const BigInt numerator = BigInt(b) * pow10(static_cast<unsigned long>(scale));
  BigInt power, den, q;
  for (long d = 1; d <= b - 2; ++d) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d + 1),
                  static_cast<unsigned long>(M) + 1);
    den = power * d;
    mpz_fdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), den.get_mpz_t());
    out.lower += q;
    if (q * den != numerator) ++q;
    out.upper += q;
    // Terms decrease in d; once the floor is zero the rest only add ceilings of 1.
    if (q <= 1 && d > 1) {
      const long remaining = b - 2 - d;
      out.upper += remaining;
      break;
    }
  }
  return out;
}

// Tail <= 10^-(P+2)? Refines the fixed-point scale until the enclosure decides.
bool tail_within(long b, int M, int P) {
  for (int extra = 10;; extra += 20) {
    const int scale = P + 2 + extra;
    const TailEnclosure t = tail_enclosure(b, M, scale);
    const BigInt target = pow10(static_cast<unsigned long>(extra));
    if (t.upper <= target) return true;
    if (t.lower > target) return false;
    if (extra > 4 * (P + 40)) return false;  // exact tie is impossible at this point
  }
}

}  // namespace

int truncation_order(long b, int P) {
  check_arguments(b, P);
  if (b == 2) return 0;
  // The d = 1 term alone, b 2^{-M-1}, must already be below the target.
  const double lower = std::log2(static_cast<double>(b)) + (P + 2) * std::log2(10.0) - 1.0;
  int M = std::max(0, static_cast<int>(std::floor(lower)) - 2);
  while (!tail_within(b, M, P)) ++M;
  return M;
}

DecimalValue tail_bound(long b, int M, int scale) {
  if (b < 2) throw DomainError("base must be >= 2");
  if (b == 2) return DecimalValue(0, scale);
  return DecimalValue(tail_enclosure(b, M, scale).upper, scale);
}

DecimalValue inner_sum(const MomentTable& table, long d, int scale) {
  if (d < 1) throw DomainError("digit offset d must be >= 1");
  // One internal guard digit keeps the Horner rounding under one final ulp.
  const int work = scale + 1;
  const BigInt divisor = d + 1;
  const BigInt unit = pow10(static_cast<unsigned long>(work));
  BigInt acc = 0;
  for (int m = table.max_order(); m >= 0; --m) {
    const ExactRational& v = table[m];
    acc += round_half_even(v.get_num() * unit, v.get_den());
    acc = round_half_even(acc, divisor);
  }
  return DecimalValue(std::move(acc), work).rescaled(scale);
}

KempnerResult kempner_sum(long b, int P) {
  check_arguments(b, P);
  KempnerResult result;
  result.base = b;
  result.precision = P;
  if (b == 2) {
    result.value = DecimalValue(0, P);
    result.tail_bound = DecimalValue(0, P + 2);
    return result;
  }

  const int M = truncation_order(b, P);
  const MomentTable table = compute_moments(b, M);
  const int work = P + 2 + decimal_digits(BigInt(b) * (M + 1));

  std::vector<BigInt> fixed(static_cast<std::size_t>(M) + 1);
  const BigInt unit = pow10(static_cast<unsigned long>(work + 1));
  for (int m = 0; m <= M; ++m) {
    fixed[static_cast<std::size_t>(m)] = round_half_even(table[m].get_num() * unit, table[m].get_den());
  }

  // Each d is independent; partial sums are exact integers so the merge order
  // cannot change the result.
  const long digits = b - 2;
  const long workers = std::clamp<long>(static_cast<long>(std::thread::hardware_concurrency()), 1, digits);
  std::vector<BigInt> partial(static_cast<std::size_t>(workers));
  auto run = [&](long w) {
    BigInt local = 0, acc;
    for (long d = 1 + w; d <= digits; d += workers) {
      const BigInt divisor = d + 1;
      acc = 0;
      for (int m = M; m >= 0; --m) {
        acc += fixed[static_cast<std::size_t>(m)];
        acc = round_half_even(acc, divisor);
      }
      local += acc;
    }
    partial[static_cast<std::size_t>(w)] = std::move(local);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (long w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  BigInt total = 0;
  for (const auto& p : partial) total += p;

  result.value = DecimalValue(std::move(total), work + 1).rescaled(P);
  result.truncation_order = M;
  result.tail_bound = tail_bound(b, M, P + 12);
  return result;
}

}  // namespace kempner
