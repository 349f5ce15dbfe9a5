#pragma once

#include <array>

#include "kempner/numerics.hpp"

namespace kempner {

// zeta(s) for integer s >= 2 with |result - zeta(s)| <= 10^-P. Partial sum to
// N = max(50, P) terms plus an Euler-Maclaurin correction whose first omitted
// term is below 10^-(P+2).
DecimalValue zeta_int(int s, int P);

// b * log(b) to within one unit at `scale` (MPFR underneath).
DecimalValue b_log_b(long b, int scale);

// A = zeta(2)/2, B = (3 zeta(2) + zeta(3))/3, C = (2 zeta(2) + 4 zeta(3) + zeta(4))/4.
struct ExpansionCoefficients {
  DecimalValue A;
  DecimalValue B;
  DecimalValue C;
};
ExpansionCoefficients expansion_coefficients(int scale);

// b log b and the three corrections A/b, B/b^2, C/b^3 at a common scale.
// partial(k) subtracts the first k corrections exactly.
struct ExpansionTerms {
  long base = 0;
  DecimalValue leading;
  std::array<DecimalValue, 3> corrections;

  DecimalValue partial(int nterms) const;
};
ExpansionTerms expansion_terms(long b, int scale);

// b log b - A/b - ... (first nterms corrections), rounded to P digits.
DecimalValue expansion(long b, int nterms, int P);

// (expansion(b, 3, P) - kempner_sum(b, P)) * b^4
DecimalValue error_ratio(long b, int P);

}  // namespace kempner
