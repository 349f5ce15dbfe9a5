#include "kempner/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <mpfr.h>

#include "kempner/asymptotics.hpp"
#include "kempner/errors.hpp"
#include "kempner/fischer.hpp"
#include "kempner/kempner.hpp"
#include "kempner/moments.hpp"
#include "kempner/oracle.hpp"
#include "kempner/powersums.hpp"
#include "kempner/ratfun.hpp"

namespace kempner {

namespace {

// Largest |z_m| b^4 / m^2 over m in [4, 80], b in [2, 64], found by an
// exact-rational sweep (attained at b = 2, m = 4).
const ExactRational kDeviationSweepMax(7, 80);

struct TableRow {
  long base;
  int digits;
  const char* expansion[4];
  const char* kempner;
};

// Published reference values, ASCII form.
const TableRow kReferenceTable[] = {
    {10, 9, {"23.025850930", "22.943604227", "22.923148030", "22.920852925"}, "22.920676619"},
    {100, 9, {"460.517018599", "460.508793928", "460.508589367", "460.508587071"}, "460.508587055"},
    {1000, 12,
     {"6907.755278982137", "6907.754456515104", "6907.754454469484", "6907.754454467189"},
     "6907.754454467187"},
};

bool within_last_digit(const DecimalValue& value, const char* reference) {
  const DecimalValue ref = DecimalValue::parse(reference);
  const DecimalValue diff = (value.rescaled(ref.scale()) - ref).abs();
  return diff <= DecimalValue(1, ref.scale());
}

DecimalValue mpfr_pi_power_over(int power, long divisor, int scale) {
  mpfr_t x, ten;
  const auto bits = static_cast<mpfr_prec_t>((scale + 30) * 3.33) + 64;
  mpfr_inits2(bits, x, ten, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(x, MPFR_RNDN);
  mpfr_pow_ui(x, x, static_cast<unsigned long>(power), MPFR_RNDN);
  mpfr_div_ui(x, x, static_cast<unsigned long>(divisor), MPFR_RNDN);
  mpfr_set_z(ten, pow10(static_cast<unsigned long>(scale)).get_mpz_t(), MPFR_RNDN);
  mpfr_mul(x, x, ten, MPFR_RNDN);
  BigInt scaled;
  mpfr_get_z(scaled.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clears(x, ten, static_cast<mpfr_ptr>(nullptr));
  return DecimalValue(std::move(scaled), scale);
}

using Check = std::function<bool(std::ostringstream&)>;

struct Runner {
  std::vector<PropertyResult> results;

  void run(const std::string& name, const Check& check) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
      ok = false;
    }
    results.push_back({name, ok, detail.str()});
  }
};

}  // namespace

std::vector<PropertyResult> run_verification(bool quick) {
  Runner r;
  const int max_b7 = quick ? 20 : 50, max_j7 = quick ? 15 : 40;

  r.run("powersums.bounds", [&](std::ostringstream& out) {
    for (long b = 2; b <= max_b7; ++b)
      for (int j = 1; j <= max_j7; ++j)
        if (!check_power_sum_bounds(b, j)) {
          out << "fails at b=" << b << " j=" << j;
          return false;
        }
    out << "b in [2," << max_b7 << "], j in [1," << max_j7 << "]";
    return true;
  });

  r.run("powersums.scaled_polynomial", [&](std::ostringstream& out) {
    for (int j = 1; j <= max_j7; ++j) {
      const auto poly = scaled_power_sum_poly(j);
      for (long b = 2; b <= max_b7; ++b) {
        BigInt bp;
        mpz_ui_pow_ui(bp.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(j + 1));
        if (poly.evaluate(make_rational(1, b)) != power_sum(b, j) / ExactRational(bp)) {
          out << "mismatch at b=" << b << " j=" << j;
          return false;
        }
      }
    }
    return true;
  });

  r.run("powersums.identity_sum_binomial", [&](std::ostringstream& out) {
    std::mt19937 rng(20240520);
    std::uniform_int_distribution<long> base(2, 100);
    std::uniform_int_distribution<int> order(0, 60);
    const int samples = quick ? 40 : 200;
    for (int i = 0; i < samples; ++i) {
      const long b = base(rng);
      const int m = order(rng);
      if (!check_identity_8(b, m)) {
        out << "fails at b=" << b << " m=" << m;
        return false;
      }
    }
    out << samples << " random (b, m)";
    return true;
  });

  r.run("powersums.direct_matches_closed_form", [&](std::ostringstream& out) {
    for (long b : {2L, 3L, 10L, 97L, 1000L})
      for (int j = 1; j <= (quick ? 10 : 30); ++j)
        if (power_sum_direct(b, j) != power_sum_closed_form(b, j)) {
          out << "b=" << b << " j=" << j;
          return false;
        }
    return true;
  });

  r.run("moments.recurrence_consistency", [&](std::ostringstream& out) {
    for (long b : {3L, 10L, 100L}) {
      const auto table = compute_moments(b, quick ? 12 : 30);
      for (int m = 1; m <= table.max_order(); ++m) {
        BigInt bp;
        mpz_ui_pow_ui(bp.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(m + 1));
        ExactRational rhs(bp);
        for (int j = 1; j <= m; ++j)
          rhs += ExactRational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j))) *
                 power_sum_direct(b, j) * table[m - j];
        if (ExactRational(BigInt(bp - b + 1)) * table[m] != rhs) {
          out << "b=" << b << " m=" << m;
          return false;
        }
      }
    }
    return true;
  });

  r.run("moments.low_order_closed_forms", [&](std::ostringstream& out) {
    for (long b : {3L, 10L, 100L}) {
      const auto table = compute_moments(b, 2);
      const ExactRational c = make_rational(1, b);
      const ExactRational q1 = 1 - c + c * c;
      const ExactRational v1 = ExactRational(b) / 2 + 1 + c / 2 * (1 - 2 * c) / q1;
      const ExactRational v2 = ExactRational(b) / 3 + 1 +
                               c / 6 * (6 - 5 * c - 7 * c * c + 10 * c * c * c - 6 * c * c * c * c) /
                                   (q1 * (1 - c * c + c * c * c));
      if (table[1] != v1 || table[2] != v2) {
        out << "b=" << b;
        return false;
      }
    }
    return true;
  });

  r.run("moments.deviation_bound_no_regression", [&](std::ostringstream& out) {
    const long max_b = quick ? 32 : 64;
    const int max_m = quick ? 40 : 80;
    ExactRational worst = 0;
    for (long b = 2; b <= max_b; ++b) {
      const auto table = compute_moments(b, max_m);
      const ExactRational b4(BigInt(BigInt(b) * b * b * b));
      for (int m = 4; m <= max_m; ++m) {
        const ExactRational ratio = ::abs(deviation(table, m).z) * b4 / ExactRational(m * m);
        if (ratio > worst) worst = ratio;
      }
    }
    out << "sup |z_m| b^4/m^2 = " << to_decimal(worst, 6).to_string() << " (frozen "
        << to_string(kDeviationSweepMax) << ")";
    return worst <= kDeviationSweepMax;
  });

  r.run("moments.matches_rational_functions", [&](std::ostringstream& out) {
    const int max_m = quick ? 10 : 20;
    for (long b : {2L, 3L, 10L, 97L}) {
      const auto table = compute_moments(b, max_m);
      for (int m = 0; m <= max_m; ++m) {
        if (w_rational(m).evaluate(make_rational(1, b)) + make_rational(b, m + 1) != table[m]) {
          out << "b=" << b << " m=" << m;
          return false;
        }
      }
    }
    return true;
  });

  r.run("ratfun.taylor_cubic_exact", [&](std::ostringstream& out) {
    for (int m = 4; m <= (quick ? 20 : 40); ++m) {
      const auto t = taylor(m, 3);
      if (t[0] != 1 || t[1] != 1 || t[2] != ExactRational(1, 2) || t[3] != make_rational(m - 2, 4)) {
        out << "m=" << m;
        return false;
      }
    }
    return true;
  });

  r.run("ratfun.taylor_low_orders", [&](std::ostringstream& out) {
    const auto t1 = taylor(1, 3), t2 = taylor(2, 3), t3 = taylor(3, 3);
    const bool ok = t1 == std::vector<ExactRational>{1, ExactRational(1, 2), ExactRational(-1, 2), -1} &&
                    t2 == std::vector<ExactRational>{1, 1, ExactRational(1, 6), -1} &&
                    t3 == std::vector<ExactRational>{1, 1, ExactRational(1, 2), 0};
    if (!ok) out << "expansion mismatch";
    return ok;
  });

  r.run("ratfun.w1_closed_form", [&](std::ostringstream&) {
    const auto w1 = w_rational(1);
    return w1.numerator() == Polynomial({1, ExactRational(-1, 2)}) &&
           w1.denominator() == Polynomial({1, -1, 1});
  });

  r.run("ratfun.residues", [&](std::ostringstream& out) {
    for (int m = 0; m <= 20; ++m)
      if (residue_at_zero(m) != ExactRational(1, m + 1)) {
        out << "m=" << m;
        return false;
      }
    return true;
  });

  r.run("ratfun.pole_radius", [&](std::ostringstream& out) {
    const double rho = pole_radius_rho();
    double worst = 10.0;
    for (int m = 1; m <= 50; ++m) worst = std::min(worst, min_pole_modulus(m));
    out << "rho=" << rho << " min modulus=" << worst;
    return worst >= rho - 1e-6;
  });

  r.run("kempner.reference_table", [&](std::ostringstream& out) {
    for (const auto& row : kReferenceTable) {
      if (quick && row.base == 1000) continue;
      for (int k = 0; k <= 3; ++k)
        if (!within_last_digit(expansion(row.base, k, row.digits), row.expansion[k])) {
          out << "expansion b=" << row.base << " k=" << k;
          return false;
        }
      if (!within_last_digit(kempner_sum(row.base, row.digits).value, row.kempner)) {
        out << "K b=" << row.base;
        return false;
      }
    }
    return true;
  });

  r.run("kempner.precision_coherence", [&](std::ostringstream& out) {
    for (long b : {3L, 10L, 50L}) {
      const int P = quick ? 8 : 15;
      const auto lo = kempner_sum(b, P).value;
      const auto hi = kempner_sum(b, P + 10).value;
      if ((hi - lo).abs() > DecimalValue(1, P)) {
        out << "b=" << b;
        return false;
      }
    }
    return true;
  });

  r.run("fischer.recurrence_residual", [&](std::ostringstream& out) {
    const auto table = fischer_betas(60);
    for (int m = 1; m <= 60; ++m)
      if (fischer_residual(table, m) != 0) {
        out << "m=" << m;
        return false;
      }
    return true;
  });

  r.run("fischer.betas_equal_moments", [&](std::ostringstream& out) {
    const int M = quick ? 20 : 60;
    const auto betas = fischer_betas(M);
    const auto moments = compute_moments(10, M);
    for (int m = 0; m <= M; ++m)
      if (betas.betas[static_cast<std::size_t>(m)] != moments[m]) {
        out << "m=" << m;
        return false;
      }
    return true;
  });

  r.run("fischer.agrees_with_moment_series", [&](std::ostringstream& out) {
    const int P = quick ? 15 : 30;
    const auto diff = (fischer_sum(P) - kempner_sum(10, P).value).abs();
    out << "P=" << P << " |difference|=" << diff.to_string();
    return diff <= DecimalValue(10, P);
  });

  r.run("asymptotics.zeta_closed_forms", [&](std::ostringstream& out) {
    const int P = quick ? 20 : 40;
    const auto d2 = (zeta_int(2, P) - mpfr_pi_power_over(2, 6, P)).abs();
    const auto d4 = (zeta_int(4, P) - mpfr_pi_power_over(4, 90, P)).abs();
    out << "P=" << P;
    return d2 <= DecimalValue(1, P) && d4 <= DecimalValue(1, P);
  });

  r.run("asymptotics.remainder_ratio_bounded", [&](std::ostringstream& out) {
    const std::vector<long> bases =
        quick ? std::vector<long>{10, 100} : std::vector<long>{10, 20, 50, 100, 200, 500, 1000};
    const auto lo = DecimalValue::parse("1.0"), hi = DecimalValue::parse("3.0");
    for (long b : bases) {
      const auto ratio = error_ratio(b, 20);
      out << "b=" << b << ":" << ratio.rescaled(4).to_string() << " ";
      if (ratio < lo || ratio > hi) return false;
    }
    return true;
  });

  r.run("oracle.brackets_contain_sum", [&](std::ostringstream& out) {
    for (long b : {3L, 4L, 5L, 10L}) {
      const auto value = kempner_sum(b, 12).value.to_rational();
      for (int L = 1; L <= (quick ? 4 : 6); ++L)
        if (!bracket(b, L).contains(value)) {
          out << "b=" << b << " L=" << L;
          return false;
        }
    }
    return true;
  });

  r.run("oracle.level_counts", [&](std::ostringstream& out) {
    for (long b : {3L, 4L, 5L, 10L}) {
      std::uint64_t expected = static_cast<std::uint64_t>(b - 2);
      for (const auto& level : enumerate_levels(b, quick ? 4 : 5)) {
        if (level.count != expected) {
          out << "b=" << b << " level=" << level.level;
          return false;
        }
        expected *= static_cast<std::uint64_t>(b - 1);
      }
    }
    return true;
  });

  r.run("oracle.binary_sum_is_zero", [&](std::ostringstream&) {
    return enumerate_partial(2, 10) == 0 && kempner_sum(2, 5).value.sign() == 0;
  });

  return r.results;
}

}  // namespace kempner
