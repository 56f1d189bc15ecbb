#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "hypalg/gamma.hpp"
#include "test_util.hpp"

using namespace hypalg;
using test_util::err_rel;

TEST_CASE("gamma at classical points") {
  CHECK(err_rel(gamma_complex(1.0), 1.0) < 1e-14);
  CHECK(err_rel(gamma_complex(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(err_rel(gamma_complex(5.0), 24.0) < 1e-14);
  CHECK(err_rel(gamma_complex(cplx(0.5, 0.0)), std::sqrt(std::numbers::pi)) < 1e-14);
}

TEST_CASE("gamma recurrence z Gamma(z) = Gamma(z+1) on the test strip") {
  auto gen = test_util::rng(11);
  std::uniform_real_distribution<double> re(-30.0, 30.0), im(-30.0, 30.0);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    cplx z(re(gen), im(gen));
    // Stay away from poles where the relative error of the difference of
    // near-singular values is measuring cancellation, not accuracy.
    if (std::abs(z.imag()) < 1e-3 && z.real() < 0.5 &&
        std::abs(z.real() - std::round(z.real())) < 1e-3)
      continue;
    cplx lhs = z * gamma_complex(z);
    cplx rhs = gamma_complex(z + 1.0);
    CHECK(err_rel(lhs, rhs) < 1e-12);
    ++checked;
  }
  CHECK(checked > 9000);
}

TEST_CASE("gamma reflection formula") {
  using std::numbers::pi;
  auto gen = test_util::rng(12);
  std::uniform_real_distribution<double> re(-20.0, 20.0), im(0.05, 20.0);
  for (int i = 0; i < 2000; ++i) {
    cplx z(re(gen), im(gen));
    cplx lhs = gamma_complex(z) * gamma_complex(1.0 - z);
    cplx rhs = pi / std::sin(pi * z);
    CHECK(err_rel(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("gamma pole detection") {
  CHECK_THROWS_AS(gamma_complex(cplx(0.0, 0.0)), PoleError);
  CHECK_THROWS_AS(gamma_complex(cplx(-3.0, 0.0)), PoleError);
  CHECK_THROWS_AS(gamma_complex(cplx(-7.0, 5e-15)), PoleError);
  CHECK_NOTHROW(gamma_complex(cplx(-3.0, 1e-8)));
  CHECK(rgamma(cplx(-4.0, 0.0)) == cplx(0.0, 0.0));
}

TEST_CASE("conjugate-pair gamma ratio telescopes") {
  // Gamma(m+1/2+i sigma/2) Gamma(m+1/2-i sigma/2) /
  //   (Gamma(n+1/2+i sigma/2) Gamma(n+1/2-i sigma/2))
  // for m=2, n=0, sigma=1 equals |3/2+i/2|^2 |1/2+i/2|^2 = (5/2)(1/2) = 5/4.
  const double sigma = 1.0;
  cplx num = gamma_complex(cplx(2.5, 0.5 * sigma)) * gamma_complex(cplx(2.5, -0.5 * sigma));
  cplx den = gamma_complex(cplx(0.5, 0.5 * sigma)) * gamma_complex(cplx(0.5, -0.5 * sigma));
  CHECK(err_rel(num / den, 1.25) < 1e-13);
  CHECK(err_rel(gamma_half_shift_ratio(0.0, 2.0, 0.5), 1.25) < 1e-14);
  CHECK(err_rel(gamma_conj_pair_abs2(2.5, 0.5) / gamma_conj_pair_abs2(0.5, 0.5),
                1.25) < 1e-13);
}

TEST_CASE("log_factorial matches integer factorials and half shifts") {
  CHECK(err_rel(std::exp(log_factorial(4.0)), 24.0) < 1e-14);
  // (1/2)! = Gamma(3/2) = sqrt(pi)/2
  CHECK(err_rel(std::exp(log_factorial(0.5)),
                0.5 * std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK_THROWS_AS(log_factorial(-1.0), NormalizationError);
}
