#pragma once

#include <cmath>
#include <vector>

#include "hypalg/error.hpp"

namespace hypalg {

/// Jacobi polynomial P_k^{(alpha,beta)} held as its terminating
/// hypergeometric series in t = (1-x)/2,
///
///   P_k(x) = ((alpha+1)_k / k!) 2F1(-k, k+alpha+beta+1; alpha+1; t),
///
/// which is valid for arbitrary real parameters (including the negative
/// non-integer beta required by the radial basis) where the classical
/// three-term recurrence is not.
class JacobiPoly {
public:
  JacobiPoly(int k, double alpha, double beta)
      : k_(k), alpha_(alpha), beta_(beta), coef_(std::size_t(k) + 1) {
    if (k < 0) throw DomainError("JacobiPoly: negative degree");
    double pref = 1.0;  // (alpha+1)_k / k!
    for (int j = 0; j < k; ++j) pref *= (alpha + 1.0 + j) / (j + 1.0);
    coef_[0] = pref;
    for (int j = 0; j < k; ++j)
      coef_[std::size_t(j) + 1] = coef_[std::size_t(j)] *
                                  (double(-k + j) * (k + alpha + beta + 1.0 + j)) /
                                  ((alpha + 1.0 + j) * (j + 1.0));
  }

  int degree() const { return k_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  double operator()(double x) const {
    const double t = 0.5 * (1.0 - x);
    double s = 0.0;
    for (int j = k_; j >= 0; --j) s = s * t + coef_[std::size_t(j)];
    return s;
  }

  /// dP/dx (the series is in t = (1-x)/2, so dP/dx = -1/2 dP/dt).
  double deriv(double x) const {
    const double t = 0.5 * (1.0 - x);
    double s = 0.0;
    for (int j = k_; j >= 1; --j) s = s * t + double(j) * coef_[std::size_t(j)];
    return -0.5 * s;
  }

  double deriv2(double x) const {
    const double t = 0.5 * (1.0 - x);
    double s = 0.0;
    for (int j = k_; j >= 2; --j)
      s = s * t + double(j) * double(j - 1) * coef_[std::size_t(j)];
    return 0.25 * s;
  }

private:
  int k_;
  double alpha_, beta_;
  std::vector<double> coef_;
};

/// Classical three-term recurrence, stable for alpha, beta > -1.
inline double jacobi_recurrence(int k, double a, double b, double x) {
  if (k == 0) return 1.0;
  double pm1 = 1.0;
  double p = (a + 1.0) + (a + b + 2.0) * 0.5 * (x - 1.0);
  for (int n = 2; n <= k; ++n) {
    const double c = 2.0 * n + a + b;
    const double a1 = 2.0 * n * (n + a + b) * (c - 2.0);
    const double a2 = (c - 1.0) * (a * a - b * b);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * c;
    const double next = ((a2 + a3 * x) * p - a4 * pm1) / a1;
    pm1 = p;
    p = next;
  }
  return p;
}

/// P_k^{(alpha,beta)}(x).  Classical parameters go through the recurrence;
/// general (negative non-integer) parameters use the terminating series,
/// whose terms are sign-coherent in the x >= 1 regime needed by the radial
/// basis.
inline double jacobi_p(int k, double alpha, double beta, double x) {
  double v;
  if (alpha > -1.0 && beta > -1.0) {
    v = jacobi_recurrence(k, alpha, beta, x);
  } else {
    JacobiPoly p(k, alpha, beta);
    v = p(x);
  }
  if (!std::isfinite(v)) throw DomainError("jacobi_p: overflow");
  return v;
}

/// Value and first two derivatives of a classical-parameter Jacobi
/// polynomial, via d/dx P_k^{(a,b)} = (k+a+b+1)/2 P_{k-1}^{(a+1,b+1)}.
struct JacobiJet {
  double v, d1, d2;
};

inline JacobiJet jacobi_jet_classical(int k, double a, double b, double x) {
  JacobiJet j{jacobi_recurrence(k, a, b, x), 0.0, 0.0};
  if (k >= 1)
    j.d1 = 0.5 * (k + a + b + 1.0) * jacobi_recurrence(k - 1, a + 1.0, b + 1.0, x);
  if (k >= 2)
    j.d2 = 0.25 * (k + a + b + 1.0) * (k + a + b + 2.0) *
           jacobi_recurrence(k - 2, a + 2.0, b + 2.0, x);
  return j;
}

}  // namespace hypalg
