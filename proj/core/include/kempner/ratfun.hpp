#pragma once

#include <span>
#include <vector>

#include "kempner/numerics.hpp"

namespace kempner {

// Dense polynomial in c with exact coefficients; coeffs[p] multiplies c^p.
// No trailing zero coefficients are stored, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<ExactRational> coeffs);
  static Polynomial constant(const ExactRational& value);
  static Polynomial monomial(const ExactRational& coeff, int power);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const ExactRational> coefficients() const { return coeffs_; }
  ExactRational coefficient(int power) const;

  ExactRational evaluate(const ExactRational& c) const;
  // this * c^power
  Polynomial shifted(int power) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const ExactRational& k, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  struct DivResult;
  // Euclidean division; throws DomainError for a zero divisor.
  static DivResult divmod(const Polynomial& dividend, const Polynomial& divisor);
  // Monic gcd (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();
  std::vector<ExactRational> coeffs_;
};

struct Polynomial::DivResult {
  Polynomial quotient;
  Polynomial remainder;
};

// First `count` coefficients of 1/p as a power series; p(0) must be nonzero.
std::vector<ExactRational> series_inverse(const Polynomial& p, int count);

// num/den, canonical with den(0) == 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  // Throws DomainError when den(0) == 0.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  ExactRational evaluate(const ExactRational& c) const;
  // Taylor coefficients at c = 0 up to and including c^order.
  std::vector<ExactRational> taylor(int order) const;
  // Cancels the numerator/denominator gcd; deterministic, den(0) kept at 1.
  RationalFunction reduced() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

// 1 - c^m + c^{m+1}
Polynomial pole_polynomial(int m);

// w_m = v_m - b/(m+1) as a rational function of c = 1/b, from
//   (1 - c^m + c^{m+1}) w_m = 1 - c^m/(m+1) + sum_{j=1}^{m-1} C(m,j) (c^{j+1} gamma_j) c^{m-j} w_{m-j}
// with w_0 = 0. The denominator is kept as the product of pole_polynomial(k)
// for k = 1..m unless `reduce` is set. Memoized; safe for concurrent callers.
RationalFunction w_rational(int m, bool reduce = false);

std::vector<ExactRational> taylor(int m, int order);

// Residue of v_m(c) = 1/((m+1)c) + w_m(c) at c = 0.
ExactRational residue_at_zero(int m);

// Smallest modulus among the complex roots of 1 - c^m + c^{m+1}, in double
// precision. Throws NumericError if a root fails its residual check.
double min_pole_modulus(int m);

// Real root of rho^2 (1 + rho) = 1 by bisection.
double pole_radius_rho();

}  // namespace kempner
