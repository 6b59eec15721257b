#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "gfcs/errors.hpp"
#include "gfcs/fock.hpp"
#include "gfcs/states.hpp"

using namespace gfcs;
using namespace gfcs::fock;
using cplx = std::complex<double>;
using doctest::Approx;

namespace {

CoefficientSeries ket(Family f, int a, int b = 0, int truncation = 10, FamilyParams p = {}) {
  return CoefficientSeries(f, {{{f, a, b}, 1.0}}, truncation, p);
}

CoefficientSeries random_sho(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Term> t;
  for (int i = 0; i <= n; ++i) t.push_back({{Family::SHO, i, 0}, cplx(u(rng), u(rng))});
  return CoefficientSeries(Family::SHO, std::move(t), n);
}

}  // namespace

TEST_CASE("labels validate per family") {
  CHECK(is_valid({Family::Sphere, 2, -2}));
  CHECK_FALSE(is_valid({Family::Sphere, 1, 2}));
  CHECK(is_valid({Family::Landau, 2, -2}));
  CHECK_FALSE(is_valid({Family::Landau, 2, -3}));
  CHECK_FALSE(is_valid({Family::SHO, -1, 0}));
  CHECK_FALSE(is_valid({Family::CalogeroSutherland, -1, 0}));
  CHECK_THROWS_AS(ket(Family::Sphere, 1, 3), DomainError);
  CHECK_THROWS_AS(CoefficientSeries(Family::SHO, {{{Family::Sphere, 0, 0}, 1.0}}, 0), DomainError);
  CHECK_THROWS_AS(CoefficientSeries(Family::SHO, {{{Family::SHO, 0, 0}, cplx(NAN, 0.0)}}, 0), DomainError);
}

TEST_CASE("series keep labels sorted and merge duplicates") {
  CoefficientSeries s(Family::SHO, {{{Family::SHO, 3, 0}, 1.0}, {{Family::SHO, 1, 0}, 2.0}, {{Family::SHO, 3, 0}, 0.5}},
                      3);
  REQUIRE(s.size() == 2);
  CHECK(s.terms()[0].label.first == 1);
  CHECK(s.coefficient({Family::SHO, 3, 0}) == cplx(1.5));
  CHECK(s.coefficient({Family::SHO, 7, 0}) == cplx(0.0));
  CHECK(s.norm_squared() == Approx(4.0 + 2.25));
  CHECK(s.normalized().norm_squared() == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("oscillator ladders") {
  CHECK(ladder_apply(ladders::sho_lower(), ket(Family::SHO, 0)).empty());
  const auto up = ladder_apply(ladders::sho_raise(), ket(Family::SHO, 2));
  REQUIRE(up.size() == 1);
  CHECK(up.terms()[0].label.first == 3);
  CHECK(up.terms()[0].coefficient.real() == Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(ladder_apply(ladders::sho_lower(), ket(Family::Sphere, 0)), DomainError);
}

TEST_CASE("su(1,1) diagonal generator") {
  for (double lambda : {0.3, 1.0, 2.5}) {
    FamilyParams p;
    p.lambda = lambda;
    for (int n : {0, 1, 7}) {
      const auto s = ladder_apply(ladders::su11_diagonal(lambda), ket(Family::CalogeroSutherland, n, 0, 10, p));
      CHECK(s.coefficient({Family::CalogeroSutherland, n, 0}).real() == Approx(n + lambda / 2 + 0.25));
    }
  }
}

TEST_CASE("Landau ladders shift both indices") {
  const auto a = ladder_apply(ladders::landau_a(), ket(Family::Landau, 3, -1));
  CHECK(a.coefficient({Family::Landau, 2, 0}).real() == Approx(std::sqrt(3.0)));
  const auto b = ladder_apply(ladders::landau_b(), ket(Family::Landau, 3, -1));
  CHECK(b.coefficient({Family::Landau, 3, -2}).real() == Approx(std::sqrt(2.0)));
  // b on the bottom of a level leaves the label set
  CHECK(ladder_apply(ladders::landau_b(), ket(Family::Landau, 2, -2)).empty());
}

TEST_CASE("eigen residuals") {
  for (cplx z : {cplx(0.0), cplx(0.7, -0.2), cplx(-1.5, 1.0)}) {
    const auto s = states::canonical_cs(z, 60);
    CHECK(eigen_residual(ladders::sho_lower(), s, z) < 1e-14);
  }
  for (double lambda : {0.8, 1.5}) {
    const cplx z(0.4, 0.9);
    const auto s = states::cs_bg(lambda, z, 60);
    CHECK(eigen_residual(ladders::su11_lower(lambda), s, -z) < 1e-14);
  }
  // eigenvalue 0 gives the sup norm of the image
  const auto r = random_sho(12, 7);
  const auto img = ladder_apply(ladders::sho_lower(), r);
  double sup = 0.0;
  for (const auto& t : img.terms()) {
    if (t.label.first < 12) sup = std::max(sup, std::abs(t.coefficient));
  }
  CHECK(eigen_residual(ladders::sho_lower(), r, 0.0) == Approx(sup));
}

TEST_CASE("inner products") {
  const auto s = states::canonical_cs(cplx(0.3, 0.4), 40);
  CHECK(std::abs(inner_product(s, s) - 1.0) < 1e-12);
  CHECK(inner_product(ket(Family::SHO, 1), ket(Family::SHO, 2)) == cplx(0.0));
  // conjugate-linear on the left
  const auto t = combine(cplx(0.0, 2.0), s, 0.0, s);
  CHECK(std::abs(inner_product(t, s) - cplx(0.0, -2.0) * inner_product(s, s)) < 1e-14);
  CHECK_THROWS_AS(inner_product(ket(Family::SHO, 0), ket(Family::Sphere, 0)), DomainError);
  CHECK_THROWS_AS(combine(1.0, ket(Family::SHO, 0), 1.0, ket(Family::Sphere, 0)), DomainError);
}

TEST_CASE("commutator [a, a+] = 1 below the window top (random vectors)") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = random_sho(30, seed);
    const auto aad = ladder_apply(ladders::sho_lower(), ladder_apply(ladders::sho_raise(), r));
    const auto ada = ladder_apply(ladders::sho_raise(), ladder_apply(ladders::sho_lower(), r));
    const auto comm = combine(1.0, aad, -1.0, ada);
    for (int n = 0; n <= 30; ++n) {
      const QuantumLabel l{Family::SHO, n, 0};
      CHECK(std::abs(comm.coefficient(l) - r.coefficient(l)) < 1e-12 * (n + 1));
    }
  }
}
