#include <cmath>
#include <thread>

#include <gtest/gtest.h>

#include "kempner/errors.hpp"
#include "kempner/moments.hpp"
#include "kempner/powersums.hpp"
#include "kempner/ratfun.hpp"
#include "test_support.hpp"

namespace kempner {
namespace {

using testing::Q;
using Coeffs = std::vector<ExactRational>;

TEST(Polynomial, ArithmeticAndDivision) {
  const Polynomial a({1, 2, 3}), b({-1, 1});
  EXPECT_EQ(a + b, Polynomial({0, 3, 3}));
  EXPECT_EQ(a - a, Polynomial());
  EXPECT_EQ(a * b, Polynomial({-1, -1, -1, 3}));
  EXPECT_EQ(a.shifted(2), Polynomial({0, 0, 1, 2, 3}));
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ(Polynomial().degree(), -1);
  const auto [q, r] = Polynomial::divmod(a * b + Polynomial({5}), b);
  EXPECT_EQ(q, a);
  EXPECT_EQ(r, Polynomial({5}));
  EXPECT_THROW(Polynomial::divmod(a, Polynomial()), DomainError);
  EXPECT_EQ(Polynomial::gcd(a * b, b * b), Polynomial({-1, 1}));
}

TEST(Polynomial, SeriesInverse) {
  // 1/(1 - c) = 1 + c + c^2 + ...
  EXPECT_EQ(series_inverse(Polynomial({1, -1}), 4), (Coeffs{1, 1, 1, 1}));
  EXPECT_THROW(series_inverse(Polynomial({0, 1}), 3), DomainError);
}

TEST(WRational, LowOrders) {
  const auto w0 = w_rational(0);
  EXPECT_TRUE(w0.numerator().is_zero());
  const auto w1 = w_rational(1);
  EXPECT_EQ(w1.numerator(), Polynomial({1, Q("-1/2")}));
  EXPECT_EQ(w1.denominator(), Polynomial({1, -1, 1}));
  EXPECT_EQ(w1.evaluate(Q("1/10")), Q("95/91"));
}

TEST(WRational, CanonicalDenominator) {
  for (int m = 0; m <= 25; ++m) EXPECT_EQ(w_rational(m).denominator().coefficient(0), 1) << m;
}

// Multiplies out the defining relation: with D_m = prod_{k<=m} q_k,
//   N_m == (1 - c^m/(m+1)) D_{m-1} + sum_j C(m,j) S_j c^{m-j} N_{m-j} (D_{m-1}/D_{m-j}),
// with D_{m-1}/D_{m-j} obtained by exact polynomial division.
TEST(WRational, DefiningIdentityHoldsSymbolically) {
  for (int m = 1; m <= 20; ++m) {
    const auto w = w_rational(m);
    const auto prev = w_rational(m - 1);
    const Polynomial& d_prev = prev.denominator();
    EXPECT_EQ(w.denominator(), pole_polynomial(m) * d_prev) << m;

    Polynomial rhs = (Polynomial::constant(1) - Polynomial::monomial(ExactRational(1, m + 1), m)) * d_prev;
    for (int j = 1; j <= m - 1; ++j) {
      const auto wj = w_rational(m - j);
      const auto [ratio, rem] = Polynomial::divmod(d_prev, wj.denominator());
      ASSERT_TRUE(rem.is_zero()) << m << " " << j;
      const Polynomial s(scaled_power_sum_poly(j).coeffs);
      rhs = rhs + ExactRational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j))) *
                      (s * wj.numerator() * ratio).shifted(m - j);
    }
    EXPECT_EQ(w.numerator(), rhs) << m;
  }
}

TEST(WRational, DenominatorDividesPoleProduct) {
  Polynomial product = Polynomial::constant(1);
  for (int m = 1; m <= 8; ++m) {
    product = product * pole_polynomial(m);
    const auto reduced = w_rational(m, true);
    EXPECT_TRUE(Polynomial::divmod(product, reduced.denominator()).remainder.is_zero()) << m;
    EXPECT_TRUE(Polynomial::divmod(product, w_rational(m).denominator()).remainder.is_zero()) << m;
  }
}

TEST(WRational, ReducedFormEvaluatesIdentically) {
  for (int m = 1; m <= 10; ++m) {
    const auto plain = w_rational(m), reduced = w_rational(m, true);
    EXPECT_LE(reduced.denominator().degree(), plain.denominator().degree());
    for (const long b : {2L, 3L, 11L}) EXPECT_EQ(plain.evaluate(make_rational(1, b)), reduced.evaluate(make_rational(1, b)));
  }
}

TEST(WRational, MatchesMomentTables) {
  for (const long b : {2L, 3L, 10L, 97L}) {
    const auto table = compute_moments(b, 20);
    for (int m = 0; m <= 20; ++m)
      EXPECT_EQ(w_rational(m).evaluate(make_rational(1, b)) + make_rational(b, m + 1), table[m]) << b << " " << m;
  }
}

TEST(WRational, ConcurrentMemoAccess) {
  std::vector<std::thread> threads;
  std::vector<Polynomial> seen(4);
  for (int t = 0; t < 4; ++t) threads.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = w_rational(18 + (t % 2)).numerator(); });
  for (auto& th : threads) th.join();
  EXPECT_EQ(seen[0], seen[2]);
  EXPECT_EQ(seen[1], seen[3]);
  EXPECT_EQ(seen[0], w_rational(18).numerator());
}

TEST(Taylor, LowOrderExpansions) {
  EXPECT_EQ(taylor(1, 3), (Coeffs{1, Q("1/2"), Q("-1/2"), -1}));
  EXPECT_EQ(taylor(2, 2), (Coeffs{1, 1, Q("1/6")}));
  EXPECT_EQ(taylor(2, 3), (Coeffs{1, 1, Q("1/6"), -1}));
  EXPECT_EQ(taylor(3, 3), (Coeffs{1, 1, Q("1/2"), 0}));
  EXPECT_EQ(taylor(4, 3), (Coeffs{1, 1, Q("1/2"), Q("1/2")}));
  EXPECT_EQ(taylor(5, 3), (Coeffs{1, 1, Q("1/2"), Q("3/4")}));
  EXPECT_EQ(taylor(6, 3), (Coeffs{1, 1, Q("1/2"), 1}));
  EXPECT_EQ(taylor(0, 2), (Coeffs{0, 0, 0}));
}

TEST(Taylor, CubicTruncationIsExactForAllLargerOrders) {
  for (int m = 4; m <= 40; ++m) EXPECT_EQ(taylor(m, 3), (Coeffs{1, 1, Q("1/2"), make_rational(m - 2, 4)})) << m;
}

TEST(Residue, IsReciprocalOfOrderPlusOne) {
  EXPECT_EQ(residue_at_zero(0), 1);
  EXPECT_EQ(residue_at_zero(4), Q("1/5"));
  EXPECT_EQ(residue_at_zero(19), Q("1/20"));
  for (int m = 0; m <= 20; ++m) EXPECT_EQ(residue_at_zero(m), ExactRational(1, m + 1));
}

TEST(PoleModulus, Rho) {
  const double rho = pole_radius_rho();
  EXPECT_NEAR(rho * rho * (1 + rho), 1.0, 1e-14);
  EXPECT_NEAR(rho, 0.7549, 1e-4);
}

TEST(PoleModulus, Examples) {
  EXPECT_NEAR(min_pole_modulus(1), 1.0, 1e-12);
  EXPECT_NEAR(min_pole_modulus(2), pole_radius_rho(), 1e-12);
  EXPECT_THROW(min_pole_modulus(0), DomainError);
}

TEST(PoleModulus, NoPoleInsideRhoDisc) {
  const double rho = pole_radius_rho();
  for (int m = 1; m <= 50; ++m) EXPECT_GE(min_pole_modulus(m), rho - 1e-6) << m;
}

}  // namespace
}  // namespace kempner
