#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gfcs/errors.hpp"
#include "gfcs/genfun.hpp"
#include "gfcs/states.hpp"
#include "oracles.hpp"

using namespace gfcs;
using namespace gfcs::states;
using fock::Family;
using fock::QuantumLabel;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("canonical states") {
  const auto vac = canonical_cs(0.0, 20);
  CHECK(vac.coefficient({Family::SHO, 0, 0}) == cplx(1.0));
  CHECK(vac.norm_squared() == Approx(1.0));
  for (double r : {0.5, 2.0, 4.5}) {
    const int n = static_cast<int>(std::ceil(r * r + 12.0 * std::sqrt(r * r + 1.0)));
    const double tail = 1.0 - canonical_cs(cplx(0.0, r), n).norm_squared();
    CHECK_MESSAGE(std::abs(tail) < 1e-12, "r=" << r);
  }
  CHECK(canonical_cs(cplx(1.0, 1.0), 40).normalization() == Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(canonical_cs(0.3, -1), DomainError);
}

TEST_CASE("spherical-harmonic states") {
  const auto s0 = legendre_cs(0, 0.0, 30);
  CHECK(s0.coefficient({Family::Sphere, 0, 0}) == cplx(1.0));
  CHECK(s0.norm_squared() == Approx(1.0));
  const auto s1 = legendre_cs(1, 0.0, 30);
  CHECK(std::abs(s1.coefficient({Family::Sphere, 1, 1})) == Approx(1.0));
  CHECK(s1.norm_squared() == Approx(1.0));
  CHECK_THROWS_AS(legendre_cs(1, 1.0, 30), DomainError);
  CHECK_THROWS_AS(legendre_cs(-1, 0.2, 30), DomainError);

  // shifted index l -> l - m: c_{l} sqrt(M) = sqrt((l+2m)!/(l!(2l+2m+1))) z^{l+m}
  for (int m : {0, 1, 3}) {
    const cplx z(0.3, -0.4);
    const int n = legendre_truncation(m, std::abs(z));
    const auto s = legendre_cs(m, z, n);
    const double mm = legendre_norm_series(m, std::abs(z), n);
    for (int l = 0; l <= 6; ++l) {
      const double w = std::sqrt(oracle::factorial(l + 2 * m) / (oracle::factorial(l) * (2.0 * l + 2 * m + 1)));
      const cplx want = w * std::pow(z, l + m);
      const cplx got = s.coefficient({Family::Sphere, l + m, m}) * std::sqrt(mm);
      CHECK_MESSAGE(std::abs(got - want) < 1e-13 * std::abs(want) + 1e-16, "m=" << m << " l=" << l);
    }
  }
}

TEST_CASE("normalisation series, printed and closed forms") {
  CHECK(legendre_norm_series(0, 0.0, 10) == 1.0);
  const double v = legendre_norm_series(1, 0.5, 60);
  CHECK(v > 0.0);
  CHECK(v == Approx(oracle::legendre_norm_brute(1, 0.5, 200)).epsilon(1e-12));
  CHECK(legendre_norm_printed(0, 0.0) == 1.0);
  for (double r : {0.1, 0.5, 0.7, 0.9}) {
    CHECK(legendre_norm_printed(0, r) == Approx(legendre_norm_series(0, r, legendre_truncation(0, r))).epsilon(1e-10));
  }
  // closed 2F1 form tracks the series for m >= 1; the printed one does not
  for (int m = 1; m <= 5; ++m) {
    for (double r : {0.2, 0.6, 0.9}) {
      const double series = legendre_norm_series(m, r, legendre_truncation(m, r));
      CHECK(legendre_norm_closed(m, r) == Approx(series).epsilon(1e-11));
      CHECK(std::abs(legendre_norm_printed(m, r) / series - 1.0) > 1e-3);
    }
  }
  // r -> 0 ratio of the printed form is (3m)!/(2m)!
  CHECK(legendre_norm_printed(2, 1e-3) / legendre_norm_closed(2, 1e-3) == Approx(720.0 / 24.0).epsilon(1e-5));
  CHECK_THROWS_AS(legendre_norm_series(1, 1.0, 10), DomainError);
  CHECK_THROWS_AS(legendre_norm_printed(0, -0.1), DomainError);
}

TEST_CASE("overlap kernels") {
  const cplx z(0.3, 0.5), zp(-0.2, 0.6);
  for (int m : {0, 2}) {
    CHECK(std::abs(legendre_overlap_closed(m, z, z, 400) - 1.0) < 1e-12);
    const int n = legendre_truncation(m, 0.7);
    const auto a = legendre_cs(m, z, n);
    const auto b = legendre_cs(m, zp, n);
    CHECK(std::abs(legendre_overlap_closed(m, z, zp, n) - fock::inner_product(a, b)) < 1e-12);
  }
  CHECK(std::abs(legendre_overlap_printed(0, z, zp, 400) - legendre_overlap_closed(0, z, zp, 400)) < 1e-14);
  // conj(z') z real negative: real kernel
  const cplx k = legendre_overlap_closed(1, cplx(0.4, 0.0), cplx(-0.5, 0.0), 400);
  CHECK(std::abs(k.imag()) < 1e-15);
}

TEST_CASE("sphere measure lines") {
  CHECK_THROWS_AS(legendre_measure_printed(0, 0.5), DomainError);
  CHECK_THROWS_AS(legendre_measure_printed(1, 1.0), DomainError);
  const double v = legendre_measure_printed(1, 0.5, MeasureLine::Second);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
  // the first line carries (1 - r^{-2})^{2m-2}
  const double r = 0.95;
  const double f = legendre_measure_over_norm(3, r, MeasureLine::First);
  CHECK(f == Approx((1 + 1 / (r * r)) * std::pow(1 - 1 / (r * r), 4) / (kPi * 24.0)).epsilon(1e-14));
}

TEST_CASE("Calogero-Sutherland states") {
  const auto g = cs_bg(1.0, 0.0, 10);
  CHECK(g.coefficient({Family::CalogeroSutherland, 0, 0}) == cplx(1.0));
  CHECK(cs_kp(1.0, 0.0, 10).coefficient({Family::CalogeroSutherland, 0, 0}) == cplx(1.0));
  const cplx z(0.3, 0.2);
  const auto bg = cs_bg(1.5, z, 80);
  CHECK(fock::eigen_residual(fock::ladders::su11_lower(1.5), bg, -z) < 1e-14);
  // ratio c_{n+1}/c_n = -z / sqrt((n+1)(n+lambda+1/2))
  for (int n = 0; n < 5; ++n) {
    const cplx ratio = bg.coefficient({Family::CalogeroSutherland, n + 1, 0}) /
                       bg.coefficient({Family::CalogeroSutherland, n, 0});
    CHECK(std::abs(ratio + z / std::sqrt((n + 1) * (n + 2.0))) < 1e-14);
  }
  CHECK_THROWS_AS(cs_kp(1.0, 1.0, 10), DomainError);
  CHECK_THROWS_AS(cs_bg(-0.6, 0.1, 10), DomainError);
  // K-P normalisation grows toward the rim
  double prev = 0.0;
  for (double r : {0.3, 0.6, 0.9, 0.99}) {
    const double inv = 1.0 / cs_kp(1.0, r, 3000).normalization();
    CHECK(inv > prev);
    prev = inv;
  }
}

TEST_CASE("Landau chain") {
  // common factor w^m keeps w = 0 regular: the chain starts at |0, m>
  const auto s0 = landau_cs(2, 0.0, 10);
  CHECK(std::abs(s0.coefficient({Family::Landau, 0, 2})) == Approx(1.0));
  CHECK(s0.norm_squared() == Approx(1.0));
  const cplx w(0.4, -0.3);
  const auto s = landau_cs(2, w, 60);
  CHECK(s.norm_squared() == Approx(1.0).epsilon(1e-14));
  CHECK(fock::eigen_residual(fock::ladders::landau_a(), s, w) < 1e-14);
  CHECK_THROWS_AS(landau_cs(-1, w, 10), DomainError);
}

TEST_CASE("flat-band states and measures") {
  const auto e = bessel_cs(Family::FlatBandEven, 2, 1e-12, 10);
  CHECK(std::abs(e.coefficient({Family::FlatBandEven, -2, -3})) == Approx(1.0));
  const auto o = bessel_cs(Family::FlatBandOdd, 1, 0.0, 10);
  CHECK(std::abs(o.coefficient({Family::FlatBandOdd, -2, -2})) == Approx(1.0));
  CHECK(o.norm_squared() == Approx(1.0));
  CHECK(bessel_cs(Family::FlatBandEven, 0, cplx(1.2, 0.5), 60).norm_squared() == Approx(1.0).epsilon(1e-14));
  CHECK(bessel_cs(Family::FlatBandOdd, 0, cplx(1.2, 0.5), 60).norm_squared() == Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(bessel_cs(Family::SHO, 0, 0.1, 10), DomainError);

  CHECK(bessel_measure(Family::FlatBandEven, 0.0) == Approx(1.0 / (2.0 * kPi)));
  CHECK(bessel_measure(Family::FlatBandEven, 1e-9) == Approx(1.0 / (2.0 * kPi)));
  CHECK(bessel_measure(Family::FlatBandEven, 2.0) == Approx(std::exp(-2.0) * std::sinh(2.0) / (4.0 * kPi)));
  CHECK(bessel_measure(Family::FlatBandOdd, 2.0) == Approx(std::exp(-2.0) * std::cosh(2.0) / (2.0 * kPi)));
  CHECK(bessel_measure(Family::FlatBandOdd, 2.0, MeasureReading::Corrected) ==
        Approx(std::exp(-2.0) * std::cosh(2.0) / (4.0 * kPi)));
  CHECK_THROWS_AS(bessel_measure(Family::FlatBandEven, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_measure(Family::FlatBandOdd, 0.0, MeasureReading::Corrected), DomainError);
}

TEST_CASE("position-space basis") {
  fock::FamilyParams p;
  CHECK(basis_wavefunction({Family::SHO, 0, 0}, p, LinePoint{0.0}).real() == Approx(std::pow(kPi, -0.25)));
  p.lambda = 1.0;
  CHECK(basis_wavefunction({Family::CalogeroSutherland, 0, 0}, p, LinePoint{1.0}).real() ==
        Approx(std::sqrt(2.0 / std::tgamma(1.5)) * std::exp(-0.5)).epsilon(1e-14));
  // Landau |m, 0> at r = 1: sqrt(c/pi) e^{-c/2} L_m(c), explicit Laguerre vs Boost
  for (int m : {0, 1, 3}) {
    const auto v = basis_wavefunction({Family::Landau, m, 0}, p, PolarPoint{1.0, 0.0});
    CHECK(v.real() == Approx(std::sqrt(1.0 / kPi) * std::exp(-0.5) * oracle::laguerre_explicit(m, 0.0, 1.0)));
    CHECK(std::abs(v - oracle::landau_ket(m, 0, 1.0, 0.0, 1.0)) < 1e-14);
  }
  // negative second index through the reflection
  for (int n = 1; n <= 4; ++n) {
    for (int mm = -n; mm <= 3; ++mm) {
      const auto v = basis_wavefunction({Family::Landau, n, mm}, p, PolarPoint{0.8, 0.4});
      const auto want = mm >= 0 ? oracle::landau_ket(n, mm, 0.8, 0.4, 1.0)
                                : std::conj(oracle::landau_ket(n + mm, -mm, 0.8, -0.4, 1.0)) *
                                      ((mm % 2 == 0) ? 1.0 : -1.0);
      CHECK_MESSAGE(std::abs(std::abs(v) - std::abs(want)) < 1e-13, "n=" << n << " m=" << mm);
    }
  }
  // flat band: beta/sqrt(2 pi) e^{i m y} B(e^x)
  p.beta = 2.0;
  const auto fb = basis_wavefunction({Family::FlatBandEven, 0, -3}, p, BandPoint{0.3, 0.5});
  const double b = genfun::assoc_bessel(1, genfun::Parity::Even, 1, 2.0, std::exp(0.3));
  CHECK(std::abs(fb - 2.0 / std::sqrt(2 * kPi) * std::polar(1.0, -1.5) * b) < 1e-14);
  CHECK_THROWS_AS(basis_wavefunction({Family::SHO, 0, 0}, p, PolarPoint{1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(basis_wavefunction({Family::CalogeroSutherland, 0, 0}, p, LinePoint{-1.0}), DomainError);
}

TEST_CASE("coherent-state wavefunctions sum the basis") {
  const auto s = canonical_cs(cplx(0.5, -0.2), 40);
  cplx direct = 0.0;
  for (const auto& t : s.terms()) direct += t.coefficient * basis_wavefunction(t.label, {}, LinePoint{0.7});
  CHECK(std::abs(cs_wavefunction(s, LinePoint{0.7}) - direct) < 1e-14);
  const auto fb = bessel_cs(Family::FlatBandOdd, 1, cplx(0.4, 0.1), 30, 1.5);
  cplx direct_fb = 0.0;
  for (const auto& t : fb.terms()) direct_fb += t.coefficient * basis_wavefunction(t.label, fb.params(), BandPoint{0.2, 0.1});
  CHECK(std::abs(cs_wavefunction(fb, BandPoint{0.2, 0.1}) - direct_fb) < 1e-13);
}
