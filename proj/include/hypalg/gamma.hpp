#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "hypalg/error.hpp"

namespace hypalg {

using cplx = std::complex<double>;

namespace detail {

// Godfrey's 15-coefficient Lanczos set, g = 607/128.  Relative error is a
// few ulp over the half-plane Re z >= 1/2, which covers the strip needed by
// the continuous-series prefactors after reflection.
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

inline cplx lanczos_sum(cplx z) {
  // z is shifted so that the series is evaluated at z-1.
  cplx s = kLanczosC[0];
  for (int k = 1; k < 15; ++k) s += kLanczosC[k] / (z + double(k - 1));
  return s;
}

inline bool near_nonpositive_integer(cplx z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

}  // namespace detail

/// log Gamma(z) for Re z >= 1/2 (no reflection), continuous in that
/// half-plane.
inline cplx log_gamma_halfplane(cplx z) {
  using std::numbers::pi;
  const cplx t = z + (detail::kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * pi) + (z - 0.5) * std::log(t) - t +
         std::log(detail::lanczos_sum(z));
}

/// Gamma(z) on the z-plane minus the poles.  Throws PoleError at
/// non-positive integers (detected within absolute tolerance 1e-14).
inline cplx gamma_complex(cplx z) {
  using std::numbers::pi;
  if (detail::near_nonpositive_integer(z, 1e-14))
    throw PoleError("gamma: pole at non-positive integer " +
                    std::to_string(z.real()));
  if (z.real() >= 0.5) return std::exp(log_gamma_halfplane(z));
  // Reflection Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return pi / (std::sin(pi * z) * std::exp(log_gamma_halfplane(1.0 - z)));
}

inline cplx gamma_complex(double x) { return gamma_complex(cplx(x, 0.0)); }

/// 1/Gamma(z); entire, returns 0 at the poles instead of throwing.
inline cplx rgamma(cplx z) {
  using std::numbers::pi;
  if (detail::near_nonpositive_integer(z, 1e-14)) return 0.0;
  if (z.real() >= 0.5) return std::exp(-log_gamma_halfplane(z));
  return std::sin(pi * z) * std::exp(log_gamma_halfplane(1.0 - z)) / pi;
}

/// log Gamma(x) for real x > 0.
inline double log_gamma(double x) {
  if (x <= 0.0) throw PoleError("log_gamma: requires x > 0");
  return std::lgamma(x);
}

/// log of x! = Gamma(x+1) for real x > -1.  Half-integer factorials in the
/// closed-form prefactors are read this way throughout.
inline double log_factorial(double x) {
  if (x <= -1.0)
    throw NormalizationError("log_factorial: argument <= -1");
  return std::lgamma(x + 1.0);
}

/// |Gamma(x+iy)|^2 = Gamma(x+iy) Gamma(x-iy), real positive for x > 0.
inline double gamma_conj_pair_abs2(double x, double y) {
  return std::exp(2.0 * log_gamma_halfplane(cplx(x, y)).real());
}

/// Telescoping ratio Gamma(hi+1/2+iy)Gamma(hi+1/2-iy) /
/// (Gamma(lo+1/2+iy)Gamma(lo+1/2-iy)) for hi-lo a non-negative integer:
/// the product of |l+1/2+iy|^2 over l = lo..hi-1.  Exact up to rounding,
/// no Gamma evaluation.
inline double gamma_half_shift_ratio(double lo, double hi, double y) {
  double r = 1.0;
  for (double l = lo; l < hi - 0.5; l += 1.0) {
    const double u = l + 0.5;
    r *= u * u + y * y;
  }
  return r;
}

}  // namespace hypalg
