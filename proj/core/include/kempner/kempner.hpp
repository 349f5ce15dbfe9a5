#pragma once

#include "kempner/moments.hpp"
#include "kempner/numerics.hpp"

namespace kempner {

// Largest decimal precision accepted before refusing with ResourceError.
inline constexpr int kMaxPrecision = 20000;

struct KempnerResult {
  long base = 0;
  int precision = 0;
  DecimalValue value;
  // Moments v_0..v_M were summed.
  int truncation_order = 0;
  // Upper bound on the discarded tail, rounded up; <= 10^-(P+2).
  DecimalValue tail_bound;
};

// Smallest M with sum_{d=1}^{b-2} b (d+1)^{-M-1} / d <= 10^-(P+2), decided
// exactly. Uses 0 < v_m <= b for the moments beyond M.
int truncation_order(long b, int P);

// The certified tail bound for a given M as a decimal rounded up at `scale`.
DecimalValue tail_bound(long b, int M, int scale);

// K(b, b-1) = sum_{d=1}^{b-2} sum_{m>=0} v_m / (d+1)^{m+1}, to within 10^-P.
KempnerResult kempner_sum(long b, int P);

// sum_{m=0}^{M} v_m / (d+1)^{m+1} in fixed point at `scale`, within one unit
// in the last place of the exact value. M is table.max_order().
DecimalValue inner_sum(const MomentTable& table, long d, int scale);

}  // namespace kempner
