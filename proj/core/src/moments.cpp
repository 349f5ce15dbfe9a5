#include "kempner/moments.hpp"

#include <string>

#include "kempner/errors.hpp"
#include "kempner/powersums.hpp"

namespace kempner {

MomentTable compute_moments(long b, int M) {
  if (b < 2) throw DomainError("base must be >= 2, got " + std::to_string(b));
  if (M < 0) throw DomainError("moment count must be >= 0");

  std::vector<ExactRational> gammas(static_cast<std::size_t>(M) + 1);
  for (int j = 1; j <= M; ++j) gammas[static_cast<std::size_t>(j)] = power_sum(b, j);

  MomentTable table;
  table.base_ = b;
  table.values_.reserve(static_cast<std::size_t>(M) + 1);
  table.values_.emplace_back(b);

  const ExactRational upper(b);
  std::vector<BigInt> pascal{1};  // row m of Pascal's triangle
  BigInt b_power = b;             // b^{m+1}
  for (int m = 1; m <= M; ++m) {
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
    row.front() = row.back() = 1;
    for (std::size_t k = 1; k < row.size() - 1; ++k) row[k] = pascal[k - 1] + pascal[k];
    pascal = std::move(row);
    b_power *= b;

    ExactRational rhs(b_power);
    for (int j = 1; j <= m; ++j) {
      rhs += ExactRational(pascal[static_cast<std::size_t>(j)]) * gammas[static_cast<std::size_t>(j)] *
             table.values_[static_cast<std::size_t>(m - j)];
    }
    ExactRational v = rhs / ExactRational(BigInt(b_power - b + 1));
    if (sgn(v) <= 0 || v > upper) {
      throw InvariantViolation("moment bound 0 < v_m <= b violated at b=" + std::to_string(b) +
                               ", m=" + std::to_string(m) + ": v_m = " + to_string(v));
    }
    table.values_.push_back(std::move(v));
  }
  return table;
}

Deviation deviation(const MomentTable& table, int m) {
  if (m < 4) throw DomainError("deviation needs m >= 4, got " + std::to_string(m));
  if (m > table.max_order()) throw DomainError("moment table too short for deviation");
  const long b = table.base();
  const ExactRational c = make_rational(1, b);
  ExactRational z = table[m] - make_rational(b, m + 1) - 1 - c - c * c / 2 -
                    make_rational(m - 2, 4) * c * c * c;
  return Deviation{b, m, std::move(z)};
}

Deviation deviation(long b, int m) {
  if (m < 4) throw DomainError("deviation needs m >= 4, got " + std::to_string(m));
  return deviation(compute_moments(b, m), m);
}

}  // namespace kempner
