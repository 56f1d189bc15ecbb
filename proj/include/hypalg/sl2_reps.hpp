#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "hypalg/error.hpp"
#include "hypalg/gamma.hpp"
#include "hypalg/half_int.hpp"

namespace hypalg {

/// Label of a unitary sl(2,R) series.  Discrete labels carry lambda in
/// N or N+1/2 with lambda > 1/2; continuous labels carry sigma > 0 and the
/// parity epsilon in {0, 1/2}.  Supplementary and trivial labels are
/// constructible (their Casimir eigenvalues are meaningful) but are excluded
/// from the harmonic analysis.
struct SeriesLabel {
  enum class Kind { discrete_plus, discrete_minus, principal, supplementary, trivial };

  Kind kind = Kind::trivial;
  HalfInt lambda{};       // discrete_* only
  double sigma = 0.0;     // principal / supplementary
  int two_epsilon = 0;    // parity (principal only; discrete parity = frac(lambda))

  static SeriesLabel discrete(int sign, HalfInt lam) {
    if (!(lam.twice > 1))
      throw IndexError("SeriesLabel: discrete series requires lambda > 1/2");
    SeriesLabel l;
    l.kind = sign > 0 ? Kind::discrete_plus : Kind::discrete_minus;
    l.lambda = lam;
    l.two_epsilon = lam.two_epsilon();
    return l;
  }
  static SeriesLabel principal(double sigma, int two_epsilon) {
    if (!(sigma > 0.0))
      throw IndexError("SeriesLabel: principal series requires sigma > 0");
    if (two_epsilon != 0 && two_epsilon != 1)
      throw IndexError("SeriesLabel: epsilon must be 0 or 1/2");
    SeriesLabel l;
    l.kind = Kind::principal;
    l.sigma = sigma;
    l.two_epsilon = two_epsilon;
    return l;
  }
  static SeriesLabel supplementary(double sigma) {
    if (!(sigma > 0.0 && sigma < 0.5))
      throw IndexError("SeriesLabel: supplementary series requires 0 < sigma < 1/2");
    SeriesLabel l;
    l.kind = Kind::supplementary;
    l.sigma = sigma;
    return l;
  }
  static SeriesLabel trivial_rep() { return SeriesLabel{}; }

  bool excluded_from_plancherel() const {
    return kind == Kind::supplementary || kind == Kind::trivial;
  }
  bool is_discrete() const {
    return kind == Kind::discrete_plus || kind == Kind::discrete_minus;
  }
  int eta() const {
    if (kind == Kind::discrete_plus) return +1;
    if (kind == Kind::discrete_minus) return -1;
    throw IndexError("SeriesLabel: eta defined for discrete series only");
  }
};

/// Casimir eigenvalue of the series: lambda(lambda-1) for the discrete
/// series, -(1/4 + sigma^2) for the principal series, -1/4 + sigma^2 for the
/// supplementary series and 0 for the trivial representation.
inline double casimir_eigenvalue(const SeriesLabel& label) {
  switch (label.kind) {
    case SeriesLabel::Kind::discrete_plus:
    case SeriesLabel::Kind::discrete_minus: {
      const double lam = label.lambda.value();
      return lam * (lam - 1.0);
    }
    case SeriesLabel::Kind::principal:
      return -(0.25 + label.sigma * label.sigma);
    case SeriesLabel::Kind::supplementary:
      return -0.25 + label.sigma * label.sigma;
    case SeriesLabel::Kind::trivial:
      return 0.0;
  }
  throw IndexError("casimir_eigenvalue: bad label");
}

/// Abstract weight vector |label, n>.
struct WeightState {
  SeriesLabel label;
  HalfInt n{};

  void validate() const {
    switch (label.kind) {
      case SeriesLabel::Kind::discrete_plus:
        if (n < label.lambda)
          throw IndexError("WeightState: discrete_plus requires n >= lambda");
        if (!n.same_parity(label.lambda))
          throw ParityError("WeightState: weight parity must match lambda");
        break;
      case SeriesLabel::Kind::discrete_minus:
        if (-label.lambda < n)
          throw IndexError("WeightState: discrete_minus requires n <= -lambda");
        if (!n.same_parity(label.lambda))
          throw ParityError("WeightState: weight parity must match lambda");
        break;
      case SeriesLabel::Kind::principal:
        if (n.two_epsilon() != label.two_epsilon)
          throw ParityError("WeightState: weight parity must match epsilon");
        break;
      default:
        break;
    }
  }
};

enum class Sl2Generator { K0, Kplus, Kminus, Q };

/// Result of acting with a generator: a single coefficient and the shifted
/// state.  A ladder step off the weight support returns coefficient zero
/// (annihilation) rather than raising.
struct ActionResult {
  cplx coefficient{};
  WeightState state;
  bool annihilated = false;
};

/// Bargmann ladder action of K0, K+/- and the Casimir on a weight state.
/// Principal-series square roots are of products of complex conjugates, so
/// the coefficients are the real positive root sqrt((n +- 1/2)^2 + sigma^2/4).
inline ActionResult act(Sl2Generator op, const WeightState& state) {
  state.validate();
  const SeriesLabel& L = state.label;
  const double n = state.n.value();

  if (op == Sl2Generator::K0) return {cplx(n, 0.0), state, false};
  if (op == Sl2Generator::Q)
    return {cplx(casimir_eigenvalue(L), 0.0), state, false};

  if (L.kind == SeriesLabel::Kind::supplementary ||
      L.kind == SeriesLabel::Kind::trivial)
    throw UnsupportedSeries("act: ladder action not provided for this series");

  const bool up = op == Sl2Generator::Kplus;
  const HalfInt n_new = up ? state.n + 1 : state.n - 1;
  double coeff = 0.0;
  switch (L.kind) {
    case SeriesLabel::Kind::discrete_plus: {
      const double lam = L.lambda.value();
      coeff = up ? std::sqrt((n + lam) * (n + 1.0 - lam))
                 : std::sqrt((n - 1.0 + lam) * (n - lam));
      break;
    }
    case SeriesLabel::Kind::discrete_minus: {
      const double lam = L.lambda.value();
      coeff = up ? -std::sqrt((-n - lam) * (-n - 1.0 + lam))
                 : -std::sqrt((-n + 1.0 - lam) * (-n + lam));
      break;
    }
    case SeriesLabel::Kind::principal: {
      // sqrt((n +- 1/2 + i sigma)(n +- 1/2 - i sigma)): product of complex
      // conjugates, so the real positive root.  This scaling is the one for
      // which K0^2 - (K+K- + K-K+)/2 reproduces -(1/4 + sigma^2).
      const double h = up ? n + 0.5 : n - 0.5;
      coeff = std::sqrt(h * h + L.sigma * L.sigma);
      break;
    }
    default:
      break;
  }
  // Boundary of the discrete weight support: exact zero, state unchanged.
  if (coeff == 0.0 ||
      (L.kind == SeriesLabel::Kind::discrete_plus && n_new < L.lambda) ||
      (L.kind == SeriesLabel::Kind::discrete_minus && -L.lambda < n_new))
    return {cplx(0.0, 0.0), state, true};
  return {cplx(coeff, 0.0), WeightState{L, n_new}, false};
}

}  // namespace hypalg
