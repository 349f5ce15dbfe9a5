#pragma once

#include <span>
#include <vector>

#include "kempner/numerics.hpp"

namespace kempner {

// v_0..v_M for one base, exact. Immutable once built.
class MomentTable {
 public:
  long base() const { return base_; }
  int max_order() const { return static_cast<int>(values_.size()) - 1; }
  const ExactRational& operator[](int m) const { return values_.at(static_cast<std::size_t>(m)); }
  std::span<const ExactRational> values() const { return values_; }

 private:
  friend MomentTable compute_moments(long b, int M);
  long base_ = 0;
  std::vector<ExactRational> values_;
};

// (b^{m+1} - b + 1) v_m = b^{m+1} + sum_{j=1}^m C(m,j) gamma_j v_{m-j}, v_0 = b.
//
// Asserts 0 < v_m <= b for every computed moment and throws InvariantViolation
// otherwise; the truncation bounds of the series summation depend on it.
MomentTable compute_moments(long b, int M);

// z_m = v_m - b/(m+1) - 1 - c - c^2/2 - (m-2) c^3/4 at c = 1/b.
struct Deviation {
  long b = 0;
  int m = 0;
  ExactRational z;
};

// m >= 4, otherwise DomainError.
Deviation deviation(long b, int m);
Deviation deviation(const MomentTable& table, int m);

}  // namespace kempner
