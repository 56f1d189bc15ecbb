#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>

#include "hypalg/error.hpp"
#include "hypalg/gamma.hpp"

namespace hypalg {

namespace detail {

inline constexpr double kIntTol = 1e-12;

/// If z is within kIntTol of a non-positive integer -N, returns N >= 0.
inline std::optional<int> as_nonpositive_integer(cplx z) {
  if (std::abs(z.imag()) > kIntTol) return std::nullopt;
  double r = std::round(z.real());
  if (r > 0.5 || std::abs(z.real() - r) > kIntTol) return std::nullopt;
  return int(-r);
}

/// Terminating series sum_{k=0}^{N} (a)_k (b)_k / ((c)_k k!) z^k where the
/// cut-off N comes from a (or b) being the non-positive integer -N.
inline cplx hyp2f1_polynomial(cplx a, cplx b, cplx c, cplx z, int N) {
  cplx term = 1.0, sum = 1.0;
  for (int k = 0; k < N; ++k) {
    term *= (a + double(k)) * (b + double(k)) /
            ((c + double(k)) * double(k + 1)) * z;
    sum += term;
  }
  return sum;
}

/// Plain Gauss series; caller guarantees |z| < 1.
inline cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z) {
  cplx term = 1.0, sum = 1.0;
  int quiet = 0;
  for (int k = 0; k < 2000000; ++k) {
    term *= (a + double(k)) * (b + double(k)) /
            ((c + double(k)) * double(k + 1)) * z;
    sum += term;
    if (std::abs(term) <= 1e-16 * (std::abs(sum) + 1e-300)) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw NonConvergence("hyp2f1: series failed to converge");
}

}  // namespace detail

/// Gauss hypergeometric 2F1(a,b;c;z) for real z <= 0 (the evaluation domain
/// z = -sinh^2 rho).  Terminating parameter sets are evaluated as the exact
/// hypergeometric polynomial for any real z.  Non-terminating evaluation maps
/// z in [-1,0] onto [0,1/2] with the Pfaff transformation and |z| > 1 onto
/// |1/z| < 1 with the standard inversion formula.
inline cplx hyp2f1(cplx a, cplx b, cplx c, double z) {
  auto na = detail::as_nonpositive_integer(a);
  auto nb = detail::as_nonpositive_integer(b);
  auto nc = detail::as_nonpositive_integer(c);

  if (na || nb) {
    int N = na && nb ? std::min(*na, *nb) : (na ? *na : *nb);
    if (nc && *nc < N)
      throw ParameterError("hyp2f1: c non-positive integer blocks the series");
    return detail::hyp2f1_polynomial(a, b, c, z, N);
  }
  if (nc)
    throw ParameterError("hyp2f1: c is a non-positive integer");
  if (z > 0.0)
    throw DomainError("hyp2f1: non-terminating case requires z <= 0");
  if (z == 0.0) return 1.0;

  if (z >= -1.0) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)).
    double w = z / (z - 1.0);  // in (0, 1/2]
    return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, w);
  }

  // Inversion about z = infinity; valid when a - b is not an integer, which
  // holds for every non-terminating parameter set arising here (a - b is
  // +-i sigma on the principal series).
  cplx ab = a - b;
  if (std::abs(ab.imag()) < detail::kIntTol &&
      std::abs(ab.real() - std::round(ab.real())) < detail::kIntTol) {
    // Degenerate difference: fall back to the (slow) Pfaff series.
    double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, w);
  }
  const double zi = 1.0 / z;
  const double lmz = std::log(-z);
  const cplx t1 = gamma_complex(c) * gamma_complex(b - a) * rgamma(b) * rgamma(c - a) *
                  std::exp(-a * lmz) *
                  detail::hyp2f1_series(a, a - c + 1.0, a - b + 1.0, zi);
  const cplx t2 = gamma_complex(c) * gamma_complex(a - b) * rgamma(a) * rgamma(c - b) *
                  std::exp(-b * lmz) *
                  detail::hyp2f1_series(b, b - c + 1.0, b - a + 1.0, zi);
  return t1 + t2;
}

/// Value and first two z-derivatives of 2F1, via the contiguous
/// parameter-shift d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z).
struct HypJet {
  cplx f, df, d2f;
};

inline HypJet hyp2f1_jet(cplx a, cplx b, cplx c, double z) {
  HypJet j;
  j.f = hyp2f1(a, b, c, z);
  const cplx d1 = a * b / c;
  j.df = d1 * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z);
  const cplx d2 = d1 * (a + 1.0) * (b + 1.0) / (c + 1.0);
  j.d2f = d2 * hyp2f1(a + 2.0, b + 2.0, c + 2.0, z);
  return j;
}

}  // namespace hypalg
