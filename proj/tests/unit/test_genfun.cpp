#include <doctest.h>

#include <cmath>
#include <complex>

#include "gfcs/errors.hpp"
#include "gfcs/genfun.hpp"
#include "gfcs/specfun.hpp"
#include "oracles.hpp"

using namespace gfcs;
using namespace gfcs::genfun;
using cplx = std::complex<double>;
using doctest::Approx;

TEST_CASE("closed forms at t = 0 and a direct Legendre evaluation") {
  CHECK(gf_closed({Family::Hermite}, 0.4, 0.0) == cplx(1.0));
  CHECK(gf_closed({Family::LaguerreMinus, 2.0}, 1.0, 0.0) == cplx(1.0));
  const cplx v = gf_closed({Family::LegendreM, 1.0}, 0.0, 0.5);
  CHECK(v.real() == Approx(1.0 / std::pow(1.25, 1.5)).epsilon(1e-15));
  CHECK(v.real() == Approx(0.715541752799933).epsilon(1e-13));
}

TEST_CASE("partial sums") {
  const auto h = gf_series({Family::Hermite}, 1.0, 0.0, 10);
  CHECK(h.partial_sum == cplx(1.0));
  CHECK(h.last_term_magnitude == 0.0);
  const auto lz = gf_series({Family::LaguerreZero, 3.0}, 0.5, 0.2, 0);
  CHECK(lz.partial_sum == cplx(1.0));
  const GeneratingFunctionSpec leg{Family::LegendreM, 1.0};
  CHECK(std::abs(gf_series(leg, 0.0, 0.5, 40).partial_sum - gf_closed(leg, 0.0, 0.5)) < 1e-10);
}

TEST_CASE("Taylor extraction reproduces the polynomial families") {
  const auto th = extract_taylor({Family::Hermite}, 0.5, 3);
  REQUIRE(th.order() == 3);
  double fact = 1.0;
  for (int n = 0; n <= 3; ++n) {
    if (n > 0) fact *= n;
    CHECK(th.coefficients[static_cast<std::size_t>(n)].real() ==
          Approx(oracle::hermite_explicit(n, 0.5) / fact).epsilon(1e-14));
  }
  const auto tl = extract_taylor({Family::LegendreM, 2.0}, 0.3, 12);
  for (int l = 0; l <= 12; ++l) {
    CHECK(tl.coefficients[static_cast<std::size_t>(l)].real() ==
          Approx(oracle::legendre_no_phase(l + 2, 2, 0.3)).epsilon(1e-12));
  }
  const auto tm = extract_taylor({Family::LaguerreMinus, 1.5}, 2.0, 15);
  for (int n = 0; n <= 15; ++n) {
    CHECK(tm.coefficients[static_cast<std::size_t>(n)].real() ==
          Approx(oracle::laguerre_explicit(n, 1.5, 2.0)).epsilon(1e-11));
  }
  const auto tz = extract_taylor({Family::LaguerreZero, 2.5}, 1.0, 15);
  for (int n = 0; n <= 15; ++n) {
    CHECK(tz.coefficients[static_cast<std::size_t>(n)].real() ==
          Approx(oracle::laguerre_explicit(n, 2.5 - n, 1.0)).epsilon(1e-11));
  }
}

TEST_CASE("order 0 extraction is the closed form at t = 0") {
  const GeneratingFunctionSpec specs[] = {
      {Family::Hermite},           {Family::LegendreM, 3.0},         {Family::LaguerrePlus, 1.0},
      {Family::LaguerreMinus, 2.0}, {Family::LaguerreZero, 4.0},     {Family::BesselEven, 0.0, 1, 2.0},
      {Family::BesselOdd, 0.0, 2, 1.0}};
  for (const auto& s : specs) {
    const double x = s.family == Family::LegendreM ? 0.4 : 1.3;
    const auto t = extract_taylor(s, x, 0);
    CHECK_MESSAGE(std::abs(t.coefficients[0] - gf_closed(s, x, 0.0)) < 1e-14 * std::max(1.0, std::abs(t.coefficients[0])),
                  to_string(s.family));
  }
}

TEST_CASE("flat-band functions: leading values and the t -> 0 limit") {
  // even k=0, m=0: bracket -> 1/x, a_{0,-1}(0,1) = 1
  CHECK(assoc_bessel(0, Parity::Even, 0, 1.0, 2.0) == Approx(0.5).epsilon(1e-14));
  // even k=1, beta=2, x=1: t^0 coefficient times a_{-1,-2}(0,2)
  const GeneratingFunctionSpec s{Family::BesselEven, 0.0, 1, 2.0};
  const double c0 = extract_taylor(s, 1.0, 0).coefficients[0].real();
  CHECK(assoc_bessel(1, Parity::Even, 0, 2.0, 1.0) == Approx(c0 * bessel_norm_coefficient(-1, -2, 2.0)).epsilon(1e-14));
  // odd k=1, m=0 finite and equal to the sequence entry
  const auto seq = assoc_bessel_sequence(1, Parity::Odd, 4, 1.0, 1.0);
  CHECK(seq[0] == assoc_bessel(1, Parity::Odd, 0, 1.0, 1.0));
  CHECK(std::isfinite(seq[0]));
}

TEST_CASE("labels and normalisation coefficients") {
  CHECK(bessel_label(2, Parity::Even, 3) == std::pair{1, -6});
  CHECK(bessel_label(2, Parity::Odd, 3) == std::pair{0, -6});
  // branches agree except for the power of beta on m <= l < 0
  CHECK(bessel_norm_coefficient(-1, -2, 2.0, BesselNormalization::Printed) ==
        Approx(2.0 * bessel_norm_coefficient(-1, -2, 2.0, BesselNormalization::Corrected)));
  CHECK(bessel_norm_coefficient(1, -3, 2.0, BesselNormalization::Printed) ==
        bessel_norm_coefficient(1, -3, 2.0, BesselNormalization::Corrected));
  CHECK_THROWS_AS(bessel_norm_coefficient(1, 0, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_norm_coefficient(-1, -2, 0.0), DomainError);
}

// x^2 B'' + (2x + beta) B' = (l(l+1) + beta m / x) B, checked by central differences
TEST_CASE("flat-band functions solve the associated Bessel equation") {
  for (auto parity : {Parity::Even, Parity::Odd}) {
    for (int k : {0, 1, 3}) {
      for (double beta : {0.5, 2.0}) {
        for (int m : {0, 2, 5}) {
          const auto [l, mm] = bessel_label(k, parity, m);
          for (double x : {0.8, 1.7, 4.0}) {
            const double h = 1e-3 * x;
            auto b = [&](double xx) { return assoc_bessel(k, parity, m, beta, xx); };
            const double b0 = b(x), bp = b(x + h), bm = b(x - h);
            const double d1 = (bp - bm) / (2 * h);
            const double d2 = (bp - 2 * b0 + bm) / (h * h);
            const double lhs = x * x * d2 + (2 * x + beta) * d1;
            const double rhs = (l * (l + 1.0) + beta * mm / x) * b0;
            const double scale = std::abs(x * x * d2) + std::abs((2 * x + beta) * d1) + std::abs(rhs);
            CHECK_MESSAGE(std::abs(lhs - rhs) < 1e-5 * scale,
                          "k=" << k << " beta=" << beta << " m=" << m << " x=" << x);
          }
        }
      }
    }
  }
}

TEST_CASE("half-integer powers cancel in the flat-band closed forms") {
  for (auto f : {Family::BesselEven, Family::BesselOdd}) {
    for (int k = 0; k <= 3; ++k) {
      CHECK(bessel_half_power_residual({f, 0.0, k, 1.5}, 1.2, 20) < 1e-12);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(gf_closed({Family::LegendreM, 1.5}, 0.1, 0.1), DomainError);
  CHECK_THROWS_AS(gf_closed({Family::LegendreM, 1.0}, 1.5, 0.1), DomainError);
  CHECK_THROWS_AS(gf_closed({Family::LaguerreZero, 1.0}, 0.1, 1.0), DomainError);
  CHECK_THROWS_AS(gf_closed({Family::BesselEven, 0.0, 0, 1.0}, 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(gf_closed({Family::BesselEven, 0.0, -1, 1.0}, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(extract_taylor({Family::Hermite}, 0.0, -1), DomainError);
  CHECK_THROWS_AS(family_from_string("chebyshev"), DomainError);
  CHECK(family_from_string("laguerre-zero") == Family::LaguerreZero);
}
