#include <gtest/gtest.h>

#include "kempner/errors.hpp"
#include "kempner/kempner.hpp"
#include "kempner/oracle.hpp"
#include "test_support.hpp"

namespace kempner {
namespace {

using testing::D;
using testing::within_units;

TEST(TruncationOrder, FrozenValues) {
  // Exact-rational linear search in tests/oracles/derive_expected.py.
  EXPECT_EQ(truncation_order(10, 9), 39);
  EXPECT_EQ(truncation_order(10, 10), 43);
  EXPECT_EQ(truncation_order(3, 12), 48);
  EXPECT_EQ(truncation_order(1000, 12), 56);
  EXPECT_EQ(truncation_order(2, 50), 0);
}

TEST(TruncationOrder, IsMinimal) {
  for (const long b : {3L, 10L, 57L}) {
    for (int P = 1; P <= 20; P += 3) {
      const int M = truncation_order(b, P);
      const ExactRational target = make_rational(1, pow10(static_cast<unsigned long>(P + 2)));
      auto exact_tail = [&](int order) {
        ExactRational s = 0;
        for (long d = 1; d <= b - 2; ++d) {
          BigInt p;
          mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d + 1), static_cast<unsigned long>(order + 1));
          s += make_rational(b, p * d);
        }
        return s;
      };
      EXPECT_LE(exact_tail(M), target) << b << " " << P;
      if (M > 0) EXPECT_GT(exact_tail(M - 1), target) << b << " " << P;
    }
  }
}

TEST(TruncationOrder, MonotoneInPrecision) {
  for (const long b : {3L, 10L, 100L}) {
    int previous = 0;
    for (int P = 1; P <= 40; ++P) {
      const int M = truncation_order(b, P);
      EXPECT_GE(M, previous);
      previous = M;
    }
  }
}

TEST(KempnerSum, BinaryBaseIsZero) {
  for (const int P : {1, 5, 30}) {
    const auto r = kempner_sum(2, P);
    EXPECT_EQ(r.value.sign(), 0);
    EXPECT_EQ(r.value.scale(), P);
    EXPECT_EQ(r.truncation_order, 0);
  }
  EXPECT_EQ(kempner_sum(2, 5).value.to_string(), "0.00000");
}

TEST(KempnerSum, ReferenceValues) {
  EXPECT_TRUE(within_units(kempner_sum(10, 9).value, D("22.920676619"), 1, 9));
  EXPECT_TRUE(within_units(kempner_sum(100, 9).value, D("460.508587055"), 1, 9));
  EXPECT_TRUE(within_units(kempner_sum(1000, 12).value, D("6907.754454467187"), 1, 12));
}

TEST(KempnerSum, MatchesIndependentHighPrecisionValues) {
  // mpmath evaluation of the double series at 50 digits (derive_expected.py).
  EXPECT_EQ(kempner_sum(3, 20).value.to_string(), "2.68285311096617543085");
  EXPECT_EQ(kempner_sum(4, 20).value.to_string(), "5.16815913284118702568");
  EXPECT_EQ(kempner_sum(5, 20).value.to_string(), "7.77949100222430208753");
  EXPECT_EQ(kempner_sum(10, 30).value.to_string(), "22.920676619264150348163657094376");
}

TEST(KempnerSum, TailBoundCertified) {
  for (const long b : {3L, 10L, 100L}) {
    for (const int P : {5, 12, 25}) {
      const auto r = kempner_sum(b, P);
      EXPECT_LE(r.tail_bound, DecimalValue(1, P + 2)) << b << " " << P;
      EXPECT_EQ(r.value.scale(), P);
    }
  }
}

TEST(KempnerSum, PrecisionCoherence) {
  for (const long b : {3L, 10L, 50L}) {
    for (const int P : {5, 12, 20}) {
      const auto lo = kempner_sum(b, P).value, hi = kempner_sum(b, P + 10).value;
      EXPECT_TRUE(within_units(hi, lo, 1, P)) << b << " " << P;
      EXPECT_LE(::abs(hi.to_rational() - lo.to_rational()), lo.ulp() / 2 + hi.ulp()) << b << " " << P;
    }
  }
}

TEST(KempnerSum, InsideOracleBrackets) {
  for (const long b : {3L, 4L, 5L, 10L}) {
    const ExactRational value = kempner_sum(b, 12).value.to_rational();
    for (int L = 1; L <= 6; ++L) EXPECT_TRUE(bracket(b, L).contains(value)) << b << " " << L;
  }
}

TEST(KempnerSum, Errors) {
  EXPECT_THROW(kempner_sum(1, 5), DomainError);
  EXPECT_THROW(kempner_sum(10, 0), DomainError);
  EXPECT_THROW(kempner_sum(10, kMaxPrecision + 1), ResourceError);
}

TEST(InnerSum, FixedPointWithinOneUlpOfExact) {
  for (const long b : {3L, 10L, 40L}) {
    const auto table = compute_moments(b, 30);
    for (long d = 1; d <= b - 2; d += (b > 10 ? 7 : 1)) {
      ExactRational exact = 0, x = make_rational(1, d + 1), power = x;
      for (int m = 0; m <= table.max_order(); ++m) {
        exact += table[m] * power;
        power *= x;
      }
      for (const int scale : {10, 25, 40}) {
        const DecimalValue fixed = inner_sum(table, d, scale);
        EXPECT_LE(::abs(fixed.to_rational() - exact), fixed.ulp()) << b << " " << d << " " << scale;
        EXPECT_TRUE(within_units(fixed, to_decimal(exact, scale), 1, scale));
      }
    }
  }
}

}  // namespace
}  // namespace kempner
