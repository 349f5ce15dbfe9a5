#pragma once

#include <vector>

#include "kempner/numerics.hpp"

namespace kempner {

struct FischerTable {
  int max_index = 0;
  std::vector<ExactRational> betas;  // beta_0 .. beta_M
};

// beta_0..beta_M from
//   sum_{k=1}^{m} C(m,k) (10^{m-k+1} - 10^k + 1) beta_{m-k} = 10 (11^m - 10^m),
// solving the order-(m+1) instance for beta_m.
FischerTable fischer_betas(int M);

// Left side minus right side of the order-m instance (m >= 1); zero when the
// table satisfies it. Needs table.max_index >= m - 1.
ExactRational fischer_residual(const FischerTable& table, int m);

// Number of beta terms fischer_sum(P) keeps: the smallest M with
// sum_{m>M} 2 * 10^-m < 10^-(P+2).
int fischer_terms(int P);

// 10 log 10 - sum_{m=1}^{M} 10^{-m-1} beta_m zeta(m+1), to within 10^-P.
DecimalValue fischer_sum(int P);

}  // namespace kempner
