#include "kempner/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "kempner/errors.hpp"
#include "kempner/powersums.hpp"

namespace kempner {

Polynomial::Polynomial(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const ExactRational& value) { return Polynomial({value}); }

Polynomial Polynomial::monomial(const ExactRational& coeff, int power) {
  if (power < 0) throw DomainError("negative monomial power");
  std::vector<ExactRational> c(static_cast<std::size_t>(power) + 1);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

ExactRational Polynomial::evaluate(const ExactRational& c) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
  return acc;
}

Polynomial Polynomial::shifted(int power) const {
  if (is_zero() || power == 0) return *this;
  std::vector<ExactRational> c(static_cast<std::size_t>(power));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<ExactRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<ExactRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // The pole polynomials are very sparse; only walk nonzero pairs.
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
    if (b.coeffs_[j] != 0) nz_b.push_back(j);
  std::vector<ExactRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  ExactRational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (const std::size_t j : nz_b) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      c[i + j] += tmp;
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const ExactRational& k, const Polynomial& p) {
  if (k == 0) return {};
  std::vector<ExactRational> c(p.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * p.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial::DivResult Polynomial::divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<ExactRational> rem = dividend.coeffs_;
  const int dd = divisor.degree();
  const int qd = dividend.degree() - dd;
  if (qd < 0) return {Polynomial{}, dividend};
  std::vector<ExactRational> quot(static_cast<std::size_t>(qd) + 1);
  const ExactRational& lead = divisor.coeffs_.back();
  for (int k = qd; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + dd);
    if (rem[top] == 0) continue;
    const ExactRational factor = rem[top] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    for (int i = 0; i <= dd; ++i) {
      const auto& dc = divisor.coeffs_[static_cast<std::size_t>(i)];
      if (dc != 0) rem[static_cast<std::size_t>(k + i)] -= factor * dc;
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const ExactRational lead = a.coeffs_.back();
  return ExactRational(1) / lead * a;
}

std::vector<ExactRational> series_inverse(const Polynomial& p, int count) {
  if (p.coefficient(0) == 0) throw DomainError("series inverse needs p(0) != 0");
  const auto coeffs = p.coefficients();
  const ExactRational inv0 = ExactRational(1) / coeffs[0];
  std::vector<ExactRational> inv(static_cast<std::size_t>(std::max(count, 0)));
  for (std::size_t k = 0; k < inv.size(); ++k) {
    if (k == 0) {
      inv[0] = inv0;
      continue;
    }
    ExactRational acc = 0;
    for (std::size_t i = 1; i <= k && i < coeffs.size(); ++i) acc += coeffs[i] * inv[k - i];
    inv[k] = -acc * inv0;
  }
  return inv;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  const ExactRational d0 = den_.coefficient(0);
  if (d0 == 0) throw DomainError("rational function denominator vanishes at c = 0");
  if (d0 != 1) {
    const ExactRational scale = ExactRational(1) / d0;
    num_ = scale * num_;
    den_ = scale * den_;
  }
}

ExactRational RationalFunction::evaluate(const ExactRational& c) const {
  const ExactRational d = den_.evaluate(c);
  if (d == 0) throw DomainError("evaluation at a pole");
  return num_.evaluate(c) / d;
}

std::vector<ExactRational> RationalFunction::taylor(int order) const {
  if (order < 0) return {};
  const auto inv = series_inverse(den_, order + 1);
  std::vector<ExactRational> out(inv.size());
  const auto num = num_.coefficients();
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i <= k && i < num.size(); ++i) out[k] += num[i] * inv[k - i];
  }
  return out;
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) return RationalFunction(Polynomial{}, Polynomial::constant(1));
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() <= 0) return *this;
  return RationalFunction(Polynomial::divmod(num_, g).quotient, Polynomial::divmod(den_, g).quotient);
}

Polynomial pole_polynomial(int m) {
  if (m < 1) throw DomainError("pole polynomial needs m >= 1");
  return Polynomial::constant(1) - Polynomial::monomial(1, m) + Polynomial::monomial(1, m + 1);
}

namespace {

class WStore {
 public:
  RationalFunction get(int m) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(m) < w_.size()) return w_[static_cast<std::size_t>(m)];
    }
    std::unique_lock lock(mutex_);
    while (w_.size() <= static_cast<std::size_t>(m)) extend();
    return w_[static_cast<std::size_t>(m)];
  }

 private:
  const Polynomial& scaled_sum(int j) {
    while (scaled_.size() < static_cast<std::size_t>(j)) {
      scaled_.emplace_back(scaled_power_sum_poly(static_cast<int>(scaled_.size()) + 1).coeffs);
    }
    return scaled_[static_cast<std::size_t>(j) - 1];
  }

  // Builds w_m with common denominator D_{m-1} = prod_{k<m} q_k. The j-sum is
  // folded Horner-style over i = m - j so each step multiplies by one sparse q_i:
  //   sum_i X_i D_{m-1}/D_i = (((X_1 q_2 + X_2) q_3 + X_3) ...) + X_{m-1}.
  void extend() {
    const int m = static_cast<int>(w_.size());
    if (m == 0) {
      w_.emplace_back(Polynomial{}, Polynomial::constant(1));
      return;
    }
    const Polynomial& prev_den = w_.back().denominator();
    Polynomial acc;
    for (int i = 1; i <= m - 1; ++i) {
      if (i > 1) acc = acc * pole_polynomial(i);
      const int j = m - i;
      const ExactRational binom(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j)));
      acc = acc + binom * (scaled_sum(j) * w_[static_cast<std::size_t>(i)].numerator()).shifted(i);
    }
    const Polynomial head =
        Polynomial::constant(1) - Polynomial::monomial(ExactRational(1, m + 1), m);
    Polynomial num = head * prev_den + acc;
    Polynomial den = pole_polynomial(m) * prev_den;
    w_.emplace_back(std::move(num), std::move(den));
  }

  std::shared_mutex mutex_;
  std::deque<RationalFunction> w_;
  std::deque<Polynomial> scaled_;
};

WStore& w_store() {
  static WStore store;
  return store;
}

}  // namespace

RationalFunction w_rational(int m, bool reduce) {
  if (m < 0) throw DomainError("w_m needs m >= 0");
  RationalFunction w = w_store().get(m);
  return reduce ? w.reduced() : w;
}

std::vector<ExactRational> taylor(int m, int order) {
  if (order < 0) throw DomainError("Taylor order must be >= 0");
  return w_rational(m).taylor(order);
}

ExactRational residue_at_zero(int m) {
  const RationalFunction w = w_rational(m);
  // v_m = (den + (m+1) c num) / ((m+1) c den); simple pole at 0 since den(0) != 0.
  const Polynomial& den = w.denominator();
  const Polynomial v_num = den + (ExactRational(m + 1) * w.numerator()).shifted(1);
  const ExactRational den0 = den.coefficient(0);
  if (den0 == 0) throw InvariantViolation("w_m is not analytic at c = 0");
  return v_num.coefficient(0) / (ExactRational(m + 1) * den0);
}

double min_pole_modulus(int m) {
  if (m < 1) throw DomainError("min_pole_modulus needs m >= 1");
  // Monic of degree n = m + 1; companion matrix has the roots as eigenvalues.
  const int n = m + 1;
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  coeffs[0] = 1.0;
  coeffs[static_cast<std::size_t>(m)] = -1.0;
  coeffs[static_cast<std::size_t>(n)] = 1.0;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[static_cast<std::size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigenvalue solver did not converge for m=" + std::to_string(m));
  }

  using cplx = std::complex<double>;
  auto eval = [&](cplx z, cplx* derivative) {
    cplx p = 0.0, dp = 0.0;
    for (int i = n; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + coeffs[static_cast<std::size_t>(i)];
    }
    *derivative = dp;
    return p;
  };

  const double max_coeff = 1.0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    cplx z = solver.eigenvalues()[k];
    cplx dp;
    for (int iter = 0; iter < 8; ++iter) {
      const cplx p = eval(z, &dp);
      if (std::abs(dp) == 0.0) break;
      const cplx step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    if (std::abs(eval(z, &dp)) > 1e-8 * max_coeff) {
      throw NumericError("root residual check failed for m=" + std::to_string(m));
    }
    best = std::min(best, std::abs(z));
  }
  return best;
}

double pole_radius_rho() {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * mid * (1.0 + mid) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace kempner
