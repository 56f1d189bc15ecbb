#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hypalg/sl2_reps.hpp"
#include "test_util.hpp"

using namespace hypalg;
using test_util::err_rel;

namespace {

WeightState ws(SeriesLabel l, int twice_n) {
  return WeightState{l, HalfInt::of_twice(twice_n)};
}

}  // namespace

TEST_CASE("ladder coefficients on the discrete series") {
  auto l = SeriesLabel::discrete(+1, HalfInt::of_int(1));
  // K+ |1,+,2> = sqrt((2+1)(2+1-1)) |1,+,3> = sqrt(6) |1,+,3>
  auto r = act(Sl2Generator::Kplus, ws(l, 4));
  CHECK(err_rel(r.coefficient, std::sqrt(6.0)) < 1e-14);
  CHECK(r.state.n.as_int() == 3);

  // Lowest-weight annihilation: K- |lambda,+,lambda> = 0.
  auto r0 = act(Sl2Generator::Kminus, ws(l, 2));
  CHECK(r0.annihilated);
  CHECK(r0.coefficient == cplx(0.0, 0.0));

  // Bounded-from-above mirror.
  auto lm = SeriesLabel::discrete(-1, HalfInt::of_int(2));
  auto rm = act(Sl2Generator::Kplus, ws(lm, -4));
  CHECK(rm.annihilated);
  auto rdn = act(Sl2Generator::Kminus, ws(lm, -4));
  CHECK(rdn.coefficient.real() < 0.0);
  CHECK(rdn.state.n.as_int() == -3);
}

TEST_CASE("casimir eigenvalues per series") {
  CHECK(casimir_eigenvalue(SeriesLabel::discrete(+1, HalfInt::of_int(1))) == 0.0);
  CHECK(err_rel(casimir_eigenvalue(SeriesLabel::principal(1.0, 0)), -1.25) <
        1e-15);
  // Q |sigma=2, eps, n> = -(1/4 + 4) = -17/4.
  auto q = act(Sl2Generator::Q, ws(SeriesLabel::principal(2.0, 0), 6));
  CHECK(err_rel(q.coefficient, -17.0 / 4.0) < 1e-15);
  CHECK(q.state.n.as_int() == 3);

  // Supplementary window: q in (-1/4, 0), approaching 0 from below.
  const double q1 = casimir_eigenvalue(SeriesLabel::supplementary(0.499));
  CHECK(q1 < 0.0);
  CHECK(q1 > -0.25);
  const double q2 = casimir_eigenvalue(SeriesLabel::supplementary(0.4999));
  CHECK(q2 > q1);
  CHECK(casimir_eigenvalue(SeriesLabel::trivial_rep()) == 0.0);
}

TEST_CASE("commutator and casimir composition on random states") {
  auto gen = test_util::rng(41);
  std::uniform_int_distribution<int> lampick(2, 7), off(0, 6), npick(-8, 8);
  std::uniform_real_distribution<double> sig(0.1, 4.0);

  auto check_state = [&](const WeightState& s) {
    // [K+, K-] = -2 K0 realized on the state.
    auto dn = act(Sl2Generator::Kminus, s);
    cplx updown = 0.0;
    if (!dn.annihilated)
      updown = dn.coefficient * act(Sl2Generator::Kplus, dn.state).coefficient;
    auto up = act(Sl2Generator::Kplus, s);
    cplx downup = 0.0;
    if (!up.annihilated)
      downup = up.coefficient * act(Sl2Generator::Kminus, up.state).coefficient;
    const cplx comm = updown - downup;
    const cplx want = -2.0 * act(Sl2Generator::K0, s).coefficient;
    CHECK(std::abs(comm - want) < 1e-13 * (1.0 + std::abs(want)));

    // Q = K0^2 - (K+K- + K-K+)/2 reproduces the series eigenvalue.
    const cplx k0 = act(Sl2Generator::K0, s).coefficient;
    const cplx q = k0 * k0 - 0.5 * (updown + downup);
    CHECK(std::abs(q - casimir_eigenvalue(s.label)) < 1e-12 * (1.0 + std::abs(q)));

    // Hermiticity: <n+1|K+|n> equals <n|K-|n+1> (real positive series).
    if (!up.annihilated) {
      auto back = act(Sl2Generator::Kminus, up.state);
      CHECK(std::abs(up.coefficient - back.coefficient) < 1e-13);
    }
  };

  for (int i = 0; i < 200; ++i) {
    const int tl = lampick(gen);  // twice-lambda in [2,7] covers both parities
    auto lp = SeriesLabel::discrete(+1, HalfInt::of_twice(tl));
    check_state(ws(lp, tl + 2 * off(gen)));
    auto lm = SeriesLabel::discrete(-1, HalfInt::of_twice(tl));
    check_state(ws(lm, -tl - 2 * off(gen)));
    for (int te : {0, 1}) {
      auto lc = SeriesLabel::principal(sig(gen), te);
      check_state(ws(lc, 2 * npick(gen) + te));
    }
  }
}

TEST_CASE("series constraints and unsupported actions") {
  CHECK_THROWS_AS(SeriesLabel::discrete(+1, HalfInt::of_twice(1)), IndexError);
  CHECK_THROWS_AS(SeriesLabel::principal(0.0, 0), IndexError);
  CHECK_THROWS_AS(SeriesLabel::supplementary(0.7), IndexError);
  CHECK(SeriesLabel::supplementary(0.3).excluded_from_plancherel());
  CHECK(SeriesLabel::trivial_rep().excluded_from_plancherel());

  auto sup = SeriesLabel::supplementary(0.3);
  CHECK_THROWS_AS(act(Sl2Generator::Kplus, ws(sup, 2)), UnsupportedSeries);
  CHECK_NOTHROW(act(Sl2Generator::Q, ws(sup, 2)));

  // Weight outside the discrete support.
  auto l = SeriesLabel::discrete(+1, HalfInt::of_int(2));
  CHECK_THROWS_AS(act(Sl2Generator::K0, ws(l, 2)), IndexError);
  // Parity mismatch between weight and label.
  CHECK_THROWS_AS(act(Sl2Generator::K0, ws(l, 5)), ParityError);
}
