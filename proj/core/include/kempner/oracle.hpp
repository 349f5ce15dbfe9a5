#pragma once

#include <cstdint>
#include <vector>

#include "kempner/numerics.hpp"

namespace kempner {

// Default enumeration ceiling: KEMPNER_MAX_TERMS if set, else 10^8.
std::uint64_t default_max_terms();

struct LevelSummary {
  int level = 0;             // digit count
  std::uint64_t count = 0;   // admissible integers in [b^{level-1}, b^level)
  ExactRational level_sum;   // their reciprocal sum
  ExactRational cumulative;  // sum over levels 1..level
};

// Enumerates every n in [1, b^L) with no base-b digit equal to b-1 and sums
// 1/n exactly, level by level. Throws ResourceError if more than max_terms
// integers would be visited.
std::vector<LevelSummary> enumerate_levels(long b, int L, std::uint64_t max_terms = default_max_terms());

ExactRational enumerate_partial(long b, int L, std::uint64_t max_terms = default_max_terms());

struct Bracket {
  long b = 0;
  int L = 0;
  ExactRational lower;
  ExactRational upper;

  ExactRational width() const { return upper - lower; }
  bool contains(const ExactRational& x) const { return lower <= x && x <= upper; }
};

// lower + (b-2) b ((b-1)/b)^L
ExactRational bracket_upper(long b, int L, const ExactRational& lower);

// lower = enumerate_partial(b, L), upper = lower + (b-2) b ((b-1)/b)^L.
// Level l holds (b-2)(b-1)^{l-1} terms, each below b^{-(l-1)}.
Bracket bracket(long b, int L, std::uint64_t max_terms = default_max_terms());

}  // namespace kempner
