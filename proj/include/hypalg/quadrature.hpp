#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <type_traits>
#include <vector>

#include "hypalg/error.hpp"
#include "hypalg/gamma.hpp"

namespace hypalg {

/// Tolerances and refinement budget for the adaptive quadratures.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_refinements = 80;
  enum class NodeRule { gauss_legendre_composite, tanh_sinh } node_rule =
      NodeRule::gauss_legendre_composite;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_refinements < 1)
      throw DomainError("QuadratureSpec: tolerances must be positive and "
                        "max_refinements >= 1");
  }
};

namespace detail {

/// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration
/// on the Legendre recurrence.
struct GaussRule {
  std::vector<double> node, weight;
};

inline GaussRule make_gauss_rule(int n) {
  using std::numbers::pi;
  GaussRule r;
  r.node.resize(std::size_t(n));
  r.weight.resize(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.node[std::size_t(i)] = x;
    r.weight[std::size_t(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

inline const GaussRule& gauss32() {
  static const GaussRule r = make_gauss_rule(32);
  return r;
}

inline const GaussRule& gauss16() {
  static const GaussRule r = make_gauss_rule(16);
  return r;
}

template <class T>
double qnorm(const T& v) {
  return std::abs(v);
}

}  // namespace detail

/// Deterministic pairwise summation (fixed reduction tree).
template <class T>
T pairwise_sum(std::vector<T>& v) {
  if (v.empty()) return T{};
  std::size_t n = v.size();
  while (n > 1) {
    std::size_t h = (n + 1) / 2;
    for (std::size_t i = 0; i + h < n; ++i) v[i] += v[i + h];
    n = h;
  }
  return v[0];
}

template <class F>
auto gauss_panel(F&& f, double a, double b, const detail::GaussRule& rule) {
  using T = std::decay_t<decltype(f(0.5 * (a + b)))>;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::vector<T> terms(rule.node.size());
  for (std::size_t i = 0; i < rule.node.size(); ++i)
    terms[i] = T(rule.weight[i] * half) * f(mid + half * rule.node[i]);
  return pairwise_sum(terms);
}

/// Adaptive composite Gauss-Legendre (32 nodes per panel, dyadic bisection)
/// on a finite interval.  Each panel carries an embedded 16-vs-32 point
/// error estimate; the panel with the largest estimate is bisected until the
/// summed estimate meets the tolerance.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  using T = std::decay_t<decltype(f(0.5 * (a + b)))>;
  const auto& fine_rule = detail::gauss32();
  const auto& coarse_rule = detail::gauss16();

  struct Leaf {
    double a, b;
    T val;
    double err;
    int depth;
  };
  auto make_leaf = [&](double lo, double hi, int depth) {
    T v = gauss_panel(f, lo, hi, fine_rule);
    T c = gauss_panel(f, lo, hi, coarse_rule);
    return Leaf{lo, hi, v, detail::qnorm(v - c), depth};
  };

  std::vector<Leaf> leaves{make_leaf(a, b, 0)};
  const std::size_t budget = std::size_t(1) << 13;
  for (;;) {
    T total{};
    double err_total = 0.0, l1 = 0.0;
    for (const auto& l : leaves) {
      total += l.val;
      err_total += l.err;
      l1 += detail::qnorm(l.val);
    }
    const double tol = std::max(spec.abs_tol, spec.rel_tol * detail::qnorm(total));
    // Roundoff floor: the summed panel values cannot be trusted below ~eps
    // times the accumulated L1 mass.
    if (err_total <= std::max(tol, 64.0 * 1e-16 * l1) && leaves.size() > 1)
      break;

    // Split the leaf with the largest error estimate (ties: leftmost).
    std::size_t pick = leaves.size();
    double worst = -1.0;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (leaves[i].depth >= spec.max_refinements) continue;
      if (leaves[i].err > worst ||
          (leaves[i].err == worst && pick < leaves.size() &&
           leaves[i].a < leaves[pick].a)) {
        worst = leaves[i].err;
        pick = i;
      }
    }
    if (pick == leaves.size() || leaves.size() >= budget)
      throw NonConvergence("integrate_adaptive: refinement budget exhausted");

    const Leaf p = leaves[pick];
    const double m = 0.5 * (p.a + p.b);
    leaves[pick] = make_leaf(p.a, m, p.depth + 1);
    leaves.push_back(make_leaf(m, p.b, p.depth + 1));
  }

  std::vector<T> vals;
  vals.reserve(leaves.size());
  // Deterministic summation order independent of the refinement history.
  std::sort(leaves.begin(), leaves.end(),
            [](const Leaf& x, const Leaf& y) { return x.a < y.a; });
  for (const auto& l : leaves) vals.push_back(l.val);
  return pairwise_sum(vals);
}

/// Tanh-sinh rule on a finite interval with level doubling.  Abscissae are
/// evaluated as exact distances from the endpoints, so integrable endpoint
/// singularities at a = 0 (the only place the library needs them) do not hit
/// the rounding wall.
template <class F>
auto integrate_tanh_sinh(F&& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  using std::numbers::pi;
  using T = std::decay_t<decltype(f(0.5 * (a + b)))>;
  const double half = 0.5 * (b - a);
  auto level_sum = [&](double h, bool odd_only) {
    std::vector<T> terms;
    double mass = 0.0;
    // The two endpoint tails die independently: a bounded side reaches the
    // floating-point wall (x rounds onto the endpoint) long before a
    // singular side has finished contributing.
    bool alive_m = true, alive_p = true;
    int tiny_m = 0, tiny_p = 0;
    for (int j = odd_only ? 1 : 0;; j += odd_only ? 2 : 1) {
      const double t = j * h;
      const double s = 0.5 * pi * std::sinh(t);
      const double w = 0.5 * pi * std::cosh(t) / (std::cosh(s) * std::cosh(s));
      if (j == 0) {
        T term = T(w) * f(a + half);
        terms.push_back(term);
        mass += detail::qnorm(term);
        continue;
      }
      // 1 - tanh(s) = 2 / (exp(2s) + 1), computed without cancellation.
      const double d = half * 2.0 / (std::exp(2.0 * s) + 1.0);
      const double xm = a + d, xp = b - d;
      if (alive_m && xm > a && d < half) {
        T term = T(w) * f(xm);
        terms.push_back(term);
        mass += detail::qnorm(term);
        if (j > 4 && detail::qnorm(term) < 1e-18 * (1.0 + mass)) {
          if (++tiny_m >= 3) alive_m = false;
        } else {
          tiny_m = 0;
        }
      } else if (xm <= a) {
        alive_m = false;
      }
      if (alive_p && xp < b && d < half) {
        T term = T(w) * f(xp);
        terms.push_back(term);
        mass += detail::qnorm(term);
        if (j > 4 && detail::qnorm(term) < 1e-18 * (1.0 + mass)) {
          if (++tiny_p >= 3) alive_p = false;
        } else {
          tiny_p = 0;
        }
      } else if (xp >= b) {
        alive_p = false;
      }
      if (!alive_m && !alive_p) break;
      if (j > (1 << 22))
        throw NonConvergence("integrate_tanh_sinh: node budget exhausted");
    }
    return pairwise_sum(terms);
  };
  double h = 0.5;
  T sum = level_sum(h, false);
  T prev = T(h * half) * sum;
  for (int level = 1; level <= std::min(spec.max_refinements, 14); ++level) {
    h *= 0.5;
    sum += level_sum(h, true);
    T cur = T(h * half) * sum;
    if (detail::qnorm(cur - prev) <=
        std::max(spec.abs_tol, spec.rel_tol * detail::qnorm(cur)) &&
        level >= 3)
      return cur;
    prev = cur;
  }
  throw NonConvergence("integrate_tanh_sinh: level budget exhausted");
}

template <class F>
auto integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec) {
  if (spec.node_rule == QuadratureSpec::NodeRule::tanh_sinh)
    return integrate_tanh_sinh(f, a, b, spec);
  return integrate_adaptive(f, a, b, spec);
}

/// Integral of g over x in [1, inf).  The integrand is assumed bounded at
/// x = 1 (all basis and matrix-element products are); the tail is mapped by
/// u = 1/x onto (0, 1/2], whose u -> 0 endpoint behaviour u^(s-2) has an a
/// priori unknown algebraic exponent and is therefore always handled by the
/// tanh-sinh rule, which is exact-to-rounding for such endpoints.
template <class F>
auto integrate_x_halfline(F&& g, const QuadratureSpec& spec) {
  auto head = integrate_finite(g, 1.0, 2.0, spec);
  auto h = [&](double u) { return g(1.0 / u) / (u * u); };
  return head + integrate_tanh_sinh(h, 0.0, 0.5, spec);
}

/// Integral of f(rho) cosh(rho) sinh(rho) d rho over [0, inf).  Internally
/// substitutes x = cosh(2 rho) (measure dx/4 on [1, inf)) and then u = 1/x;
/// the near-origin panel is integrated in rho, where the measure factor
/// regularises integrands with sinh powers down to sinh^(-1) and the
/// rho = 0 endpoint is exactly representable.
template <class F>
auto integrate_halfline(F&& f, const QuadratureSpec& spec = QuadratureSpec{}) {
  const double rho0 = 0.5 * std::acosh(2.0);
  auto head = integrate_finite(
      [&](double rho) { return f(rho) * std::cosh(rho) * std::sinh(rho); },
      0.0, rho0, spec);
  auto tail = integrate_tanh_sinh(
      [&](double u) {
        return f(0.5 * std::acosh(1.0 / u)) / (u * u);
      },
      0.0, 0.5, spec);
  return head + decltype(tail)(0.25) * tail;
}

/// Fixed-panel (non-adaptive, deterministic) version of the x-halfline
/// integral: dyadic panels with a 32-point rule.  Used where many thousands
/// of smooth integrals of the same family are needed and the adaptive
/// machinery would re-derive the same panelization each time.
template <class F>
auto integrate_x_halfline_fixed(F&& g, int dyadic_levels = 12) {
  using T = std::decay_t<decltype(g(1.0))>;
  const auto& rule = detail::gauss32();
  std::vector<T> parts;
  // Panels over x in [1,2], dyadically refined toward x = 1 where the
  // integrands carry half-integer powers of (x-1).
  double lo = 1.5;
  parts.push_back(gauss_panel(g, 1.5, 2.0, rule));
  for (int j = 0; j < dyadic_levels; ++j) {
    const double nlo = 1.0 + 0.5 * (lo - 1.0);
    parts.push_back(gauss_panel(g, nlo, lo, rule));
    lo = nlo;
  }
  parts.push_back(gauss_panel(g, 1.0, lo, rule));
  // Tail via u = 1/x on (0, 1/2], refined toward u = 0.
  auto h = [&](double u) { return g(1.0 / u) / (u * u); };
  double hi = 0.5;
  for (int j = 0; j < dyadic_levels; ++j) {
    const double nhi = hi * 0.5;
    parts.push_back(gauss_panel(h, nhi, hi, rule));
    hi = nhi;
  }
  parts.push_back(gauss_panel(h, 0.0, hi, rule));
  return pairwise_sum(parts);
}

}  // namespace hypalg
