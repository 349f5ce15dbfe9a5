#include "kempner/oracle.hpp"

#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

#include "kempner/errors.hpp"

namespace kempner {

namespace {

// Balanced pairwise summation: entries on the stack always have strictly
// decreasing sizes, like the carries of a binary counter.
class PairwiseSum {
 public:
  void add(ExactRational x) {
    std::size_t size = 1;
    while (!stack_.empty() && stack_.back().second == size) {
      x += stack_.back().first;
      size *= 2;
      stack_.pop_back();
    }
    stack_.emplace_back(std::move(x), size);
  }

  ExactRational total() const {
    ExactRational acc = 0;
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) acc += it->first;
    return acc;
  }

 private:
  std::vector<std::pair<ExactRational, std::size_t>> stack_;
};

// Reciprocal sum over level-`level` admissible integers with a fixed leading
// digit. Digits run over 0..b-2 with an odometer; n is kept in step.
ExactRational sum_partition(unsigned long b, int level, unsigned long leading, std::uint64_t& count) {
  PairwiseSum sum;
  const auto positions = static_cast<std::size_t>(level - 1);
  std::vector<unsigned long> digits(positions, 0);
  std::vector<std::uint64_t> place(positions);
  std::uint64_t p = 1;
  for (std::size_t k = 0; k < positions; ++k) {
    place[k] = p;
    p *= b;
  }
  std::uint64_t n = leading * p;
  const unsigned long top = b - 2;
  for (;;) {
    sum.add(ExactRational(1UL, static_cast<unsigned long>(n)));
    ++count;
    std::size_t k = 0;
    while (k < positions && digits[k] == top) {
      n -= top * place[k];
      digits[k] = 0;
      ++k;
    }
    if (k == positions) break;
    ++digits[k];
    n += place[k];
  }
  return sum.total();
}

}  // namespace

std::uint64_t default_max_terms() {
  if (const char* env = std::getenv("KEMPNER_MAX_TERMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 100'000'000ULL;
}

std::vector<LevelSummary> enumerate_levels(long b, int L, std::uint64_t max_terms) {
  if (b < 2) throw DomainError("base must be >= 2, got " + std::to_string(b));
  if (L < 0) throw DomainError("level count must be >= 0");

  // Total visited: sum_{l<=L} (b-2)(b-1)^{l-1} = (b-1)^L - 1.
  BigInt total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(b - 1), static_cast<unsigned long>(L));
  total -= 1;
  if (total > BigInt(std::to_string(max_terms))) {
    throw ResourceError("enumeration of " + total.get_str() + " integers exceeds the ceiling of " +
                        std::to_string(max_terms) + " (KEMPNER_MAX_TERMS)");
  }
  BigInt largest;
  mpz_ui_pow_ui(largest.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(L));
  if (b > 2 && largest > BigInt(std::to_string(std::numeric_limits<unsigned long>::max()))) {
    throw ResourceError("integers below b^L do not fit in 64 bits");
  }

  std::vector<LevelSummary> levels;
  ExactRational cumulative = 0;
  const auto ub = static_cast<unsigned long>(b);
  for (int level = 1; level <= L; ++level) {
    LevelSummary s;
    s.level = level;
    s.level_sum = 0;
    for (unsigned long leading = 1; leading + 2 <= ub; ++leading) {
      s.level_sum += sum_partition(ub, level, leading, s.count);
    }
    cumulative += s.level_sum;
    s.cumulative = cumulative;
    levels.push_back(std::move(s));
  }
  return levels;
}

ExactRational enumerate_partial(long b, int L, std::uint64_t max_terms) {
  const auto levels = enumerate_levels(b, L, max_terms);
  return levels.empty() ? ExactRational(0) : levels.back().cumulative;
}

ExactRational bracket_upper(long b, int L, const ExactRational& lower) {
  if (b < 3) throw DomainError("bracket needs b >= 3");
  if (L < 1) throw DomainError("bracket needs L >= 1");
  BigInt num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(b - 1), static_cast<unsigned long>(L));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(L));
  return lower + ExactRational(BigInt((b - 2) * b)) * make_rational(num, den);
}

Bracket bracket(long b, int L, std::uint64_t max_terms) {
  if (b < 3) throw DomainError("bracket needs b >= 3");
  if (L < 1) throw DomainError("bracket needs L >= 1");
  Bracket out;
  out.b = b;
  out.L = L;
  out.lower = enumerate_partial(b, L, max_terms);
  out.upper = bracket_upper(b, L, out.lower);
  return out;
}

}  // namespace kempner
