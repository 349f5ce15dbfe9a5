#include "kempner/fischer.hpp"

#include <string>

#include "kempner/asymptotics.hpp"
#include "kempner/errors.hpp"
#include "kempner/kempner.hpp"

namespace kempner {

namespace {

BigInt power_ui(unsigned long base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

// C(m,k) (10^{m-k+1} - 10^k + 1)
BigInt fischer_coefficient(int m, int k) {
  const auto um = static_cast<unsigned long>(m), uk = static_cast<unsigned long>(k);
  return binomial(um, uk) * (power_ui(10, um - uk + 1) - power_ui(10, uk) + 1);
}

BigInt fischer_rhs(int m) {
  const auto um = static_cast<unsigned long>(m);
  return 10 * (power_ui(11, um) - power_ui(10, um));
}

}  // namespace

FischerTable fischer_betas(int M) {
  if (M < 0) throw DomainError("fischer_betas needs M >= 0");
  FischerTable table;
  table.max_index = M;
  table.betas.reserve(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) {
    // Order-(m+1) instance; its k = 1 term carries beta_m.
    const int order = m + 1;
    ExactRational rest(fischer_rhs(order));
    for (int k = 2; k <= order; ++k) {
      rest -= ExactRational(fischer_coefficient(order, k)) * table.betas[static_cast<std::size_t>(order - k)];
    }
    table.betas.push_back(rest / ExactRational(fischer_coefficient(order, 1)));
  }
  return table;
}

ExactRational fischer_residual(const FischerTable& table, int m) {
  if (m < 1) throw DomainError("Fischer recurrence instances start at m = 1");
  if (m - 1 > table.max_index) throw DomainError("Fischer table too short");
  ExactRational lhs = 0;
  for (int k = 1; k <= m; ++k) {
    lhs += ExactRational(fischer_coefficient(m, k)) * table.betas[static_cast<std::size_t>(m - k)];
  }
  return lhs - ExactRational(fischer_rhs(m));
}

int fischer_terms(int P) {
  if (P < 1) throw DomainError("precision must be >= 1");
  // sum_{m>M} 2 10^-m = (2/9) 10^-M
  const ExactRational target = make_rational(1, pow10(static_cast<unsigned long>(P + 2)));
  int M = 0;
  while (make_rational(2, BigInt(9 * pow10(static_cast<unsigned long>(M)))) >= target) ++M;
  return M;
}

DecimalValue fischer_sum(int P) {
  if (P < 1) throw DomainError("precision must be >= 1");
  if (P > kMaxPrecision) throw ResourceError("precision exceeds limit");
  const int M = fischer_terms(P);
  const FischerTable table = fischer_betas(M);
  const int work = P + 2 + static_cast<int>(std::to_string(M + 1).size());

  DecimalValue sum = b_log_b(10, work);
  for (int m = 1; m <= M; ++m) {
    const ExactRational zeta = zeta_int(m + 1, work + 1).to_rational();
    const ExactRational term = table.betas[static_cast<std::size_t>(m)] * zeta /
                               ExactRational(pow10(static_cast<unsigned long>(m + 1)));
    sum -= DecimalValue::from_rational(term, work);
  }
  return sum.rescaled(P);
}

}  // namespace kempner
