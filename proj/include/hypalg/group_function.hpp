#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include "hypalg/error.hpp"
#include "hypalg/gamma.hpp"
#include "hypalg/quadrature.hpp"

namespace hypalg {

/// Point (rho, phi1, phi2) on the hyperboloid parameterisation of the group.
struct GroupPoint {
  double rho = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  /// Alternate radial coordinate x = cosh(2 rho) >= 1.
  double x() const { return std::cosh(2.0 * rho); }

  static GroupPoint from_x(double x, double phi1 = 0.0, double phi2 = 0.0) {
    if (x < 1.0) throw DomainError("GroupPoint: x must be >= 1");
    return GroupPoint{0.5 * std::acosh(x), phi1, phi2};
  }

  void validate() const {
    if (rho < 0.0) throw DomainError("GroupPoint: rho must be >= 0");
  }
};

/// Value and first two rho-derivatives of a radial function.
struct Jet2 {
  cplx v{}, d1{}, d2{};
};

using RadialJetFn = std::function<Jet2(double)>;

/// Function on the group of the separated form
///   f(rho,phi1,phi2) = exp(i (p1 phi1 + p2 phi2)) u(rho),
/// which covers every matrix element and Hilbert-basis function here
/// (p1 = m+n and p2 = m-n are always integers).  Angular integrals against
/// such functions are exact Kronecker deltas.
struct PhaseRadial {
  int p1 = 0;
  int p2 = 0;
  RadialJetFn radial;

  cplx phase(const GroupPoint& p) const {
    return std::exp(cplx(0.0, p1 * p.phi1 + p2 * p.phi2));
  }
  cplx operator()(const GroupPoint& p) const {
    return phase(p) * radial(p.rho).v;
  }

  /// Weight read off the phase exponents: the L0 eigenvalue is
  /// (p1 - p2)/2 and the R0 eigenvalue (p1 + p2)/2.
  double l0_weight() const { return 0.5 * (p1 - p2); }
  double r0_weight() const { return 0.5 * (p1 + p2); }
};

/// Group scalar product (1/4pi^2) Int cosh sinh drho dphi1 dphi2 conj(f) g.
/// For separated functions the angular part collapses to a phase match and
/// one radial quadrature.
inline cplx inner_product_sl2(const PhaseRadial& f, const PhaseRadial& g,
                              const QuadratureSpec& spec = QuadratureSpec{}) {
  if (f.p1 != g.p1 || f.p2 != g.p2) return 0.0;
  return integrate_halfline(
      [&](double rho) { return std::conj(f.radial(rho).v) * g.radial(rho).v; },
      spec);
}

/// Generic fallback: trapezoidal rule in each angle (spectrally accurate for
/// trigonometric polynomials) around an adaptive radial quadrature.
template <class F, class G>
cplx inner_product_sl2_generic(F&& f, G&& g, const QuadratureSpec& spec,
                               int angular_nodes = 32) {
  using std::numbers::pi;
  auto radial = [&](double rho) {
    cplx acc = 0.0;
    for (int i = 0; i < angular_nodes; ++i) {
      const double phi1 = 2.0 * pi * i / angular_nodes;
      for (int j = 0; j < angular_nodes; ++j) {
        const double phi2 = 2.0 * pi * j / angular_nodes;
        const GroupPoint p{rho, phi1, phi2};
        acc += std::conj(f(p)) * g(p);
      }
    }
    return acc / double(angular_nodes * angular_nodes);
  };
  return integrate_halfline(radial, spec);
}

}  // namespace hypalg
