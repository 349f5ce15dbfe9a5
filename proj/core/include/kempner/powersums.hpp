#pragma once

#include <vector>

#include "kempner/numerics.hpp"

namespace kempner {

// Bernoulli number B_n with the B_1 = -1/2 convention. Cached; safe to call
// from several threads.
ExactRational bernoulli(int n);

// gamma_j(b) = sum_{d=1}^{b-1} d^j. Direct summation for b*j <= 10^6, the
// Bernoulli closed form above that.
ExactRational power_sum(long b, int j);
ExactRational power_sum_direct(long b, int j);
// Faulhaber form; only valid for j >= 1.
ExactRational power_sum_closed_form(long b, int j);

// c^{j+1} * gamma_j as a polynomial in c = 1/b.
struct ScaledPolynomial {
  int j = 0;
  // coefficient of c^p at index p; size j + 1
  std::vector<ExactRational> coeffs;

  ExactRational evaluate(const ExactRational& c) const;
};

// Throws DomainError for j < 1 (c * gamma_0 = 1 - c is not of this form).
ScaledPolynomial scaled_power_sum_poly(int j);

// c^{m+1} sum_{j=0}^m C(m,j) gamma_j/(m+1-j) == (1 - c^{m+1})/(m+1) at c = 1/b.
bool check_identity_8(long b, int m);

// 1/(j+1) - c/2 <= c^{j+1} gamma_j <= 1/(j+1) - c/2 + j c^2/12 at c = 1/b.
// Holds only at reciprocals of integers.
bool check_power_sum_bounds(long b, int j);

}  // namespace kempner
