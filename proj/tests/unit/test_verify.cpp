#include <doctest.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "gfcs/checks.hpp"
#include "gfcs/errors.hpp"
#include "gfcs/quadrature.hpp"
#include "gfcs/report.hpp"
#include "gfcs/spectrum.hpp"
#include "gfcs/suite.hpp"

using namespace gfcs;
using namespace gfcs::verify;
using doctest::Approx;

TEST_CASE("radial quadrature") {
  CHECK(integrate_radial([](double r) { return std::exp(-r); }, Support::HalfLine, 1e-12).value ==
        Approx(1.0).epsilon(1e-12));
  CHECK(integrate_radial([](double r) { return std::pow(r, 5) * std::exp(-r); }, Support::HalfLine, 1e-12).value ==
        Approx(120.0).epsilon(1e-12));
  CHECK(integrate_radial([](double r) { return r * r * r; }, Support::UnitInterval, 1e-12).value ==
        Approx(0.25).epsilon(1e-14));
  CHECK(integrate_interval([](double x) { return std::cos(x); }, 0.0, std::numbers::pi / 2, 1e-12).value ==
        Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(integrate_radial([](double r) { return 1.0 / r; }, Support::UnitInterval, 1e-12), ConvergenceError);
}

TEST_CASE("endpoint probe separates log divergence from an integrable singularity") {
  const auto d = probe_endpoint([](double r) { return 1.0 / r; }, 0.0, 1.0, false);
  CHECK(d.divergent);
  CHECK(d.cutoffs.size() == d.partials.size());
  const auto c = probe_endpoint([](double r) { return 1.0 / std::sqrt(r); }, 0.0, 1.0, false);
  CHECK_FALSE(c.divergent);
  const auto u = probe_endpoint([](double r) { return 1.0 / (1.0 - r); }, 0.0, 1.0, true);
  CHECK(u.divergent);
}

TEST_CASE("Gauss-Legendre rules are exact to degree 2n-1") {
  for (int n : {1, 4, 16, 40}) {
    const auto g = gauss_legendre(n);
    REQUIRE(g.nodes.size() == static_cast<std::size_t>(n));
    for (int deg = 0; deg <= 2 * n - 1; deg += 1) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += g.weights[i] * std::pow(g.nodes[i], deg);
      const double want = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK_MESSAGE(std::abs(s - want) < 1e-13, "n=" << n << " deg=" << deg);
    }
  }
}

TEST_CASE("report records") {
  VerificationReport r;
  r.check_id = "x";
  r.tolerance = 1e-8;
  r.residuals = {1e-12, 3e-9};
  r.finalize();
  CHECK(r.max_residual == 3e-9);
  CHECK(r.pass);
  const auto j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"check_id", "params", "grid_summary", "max_residual", "tolerance", "pass",
                                         "notes"});
  r.residuals.push_back(std::numeric_limits<double>::quiet_NaN());
  r.finalize();
  CHECK(std::isinf(r.max_residual));
  CHECK_FALSE(r.pass);
  CHECK(r.to_json()["max_residual"] == "inf");
  r.tolerance = 0.0;
  CHECK_THROWS(r.finalize());
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 6.02214076e23, 4.9e-324}) {
    const auto s = format_double(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(-4.0) == "-4");
  VerificationReport r;
  r.check_id = "x";
  r.tolerance = 1.0;
  r.residuals = {0.5};
  r.finalize();
  const auto csv = reports_to_csv({r});
  CHECK(csv.rfind("check_id,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("spectrum values and the degeneracy scan") {
  CHECK(spectrum(0, 1) == 0.75);
  CHECK(spectrum(0, 0) == -0.25);
  CHECK(spectrum_quarters(3, -2) == (2 * -2 - 6 - 1) * (2 * -2 + 6 + 1));
  states::ModelConstants c;
  c.spectrum_prefactor = 2.0;
  CHECK(spectrum(0, 1, c) == 1.5);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(-7));
  const auto scan = degeneracy_scan(20);
  std::size_t total = 0;
  for (const auto& [mult, count] : scan.multiplicity_histogram) total += mult * count;
  CHECK(total == 41u * 41u);
  CHECK_FALSE(scan.claim_holds);
  CHECK_FALSE(scan.counterexamples.empty());
  CHECK(scan.verdict().find("refuted") != std::string::npos);
  // every listed counterexample really shares one level
  for (const auto& ce : scan.counterexamples) {
    for (const auto& [l, m] : ce.states) CHECK(spectrum_quarters(l, m) == ce.quarters);
  }
}

TEST_CASE("check runners on small grids") {
  const auto h = check_gf_identity({genfun::Family::Hermite}, make_gf_grid(-3.0, 3.0, 5, 1.5, false), 60, 1e-10);
  CHECK(h.pass);
  const auto lg = check_gf_identity({genfun::Family::LegendreM, 2.0}, make_gf_grid(-0.9, 0.9, 5, 0.8, false), 400, 1e-8);
  CHECK(lg.pass);
  // too few terms: the runner has to notice
  CHECK_FALSE(check_gf_identity({genfun::Family::LegendreM, 2.0}, make_gf_grid(-0.9, 0.9, 5, 0.8, false), 10, 1e-8).pass);
  const auto be = check_gf_identity({genfun::Family::BesselEven, 0.0, 1, 2.0}, make_gf_grid(0.2, 4.0, 4, 0.5, false), 40,
                                    1e-8);
  CHECK(be.pass);
  CHECK(check_commutators(Algebra::HarmonicOscillator, 30, 1.0, 1, 1e-12).pass);
  CHECK(check_eigen(EigenFamily::Canonical, {{0.5, 0.5}}, 60, 1.0, 0, 1e-12).pass);
  CHECK(check_moment_resolution(MomentFamily::SHO, 0, 0, 10, 1e-10).pass);
  const auto odd = check_moment_resolution(MomentFamily::FlatBandOddPrinted, 0, 0, 3, 1e-8);
  CHECK_FALSE(odd.pass);
  // moment / required = 2m + 1 under the printed odd measure
  REQUIRE(odd.residuals.size() == 4);
  for (int m = 0; m <= 3; ++m) CHECK(odd.residuals[static_cast<std::size_t>(m)] == Approx(2.0 * m).epsilon(1e-8));
  OrthoParams p;
  p.lambda = 1.0;
  CHECK(check_orthogonality(OrthoModel::CalogeroSutherland, p, 6, 1e-8).pass);
  CHECK(check_orthogonality(OrthoModel::Sphere, {}, 5, 1e-8).pass);
  p.k = 1;
  p.beta = 2.0;
  CHECK(check_orthogonality(OrthoModel::FlatBandEven, p, 4, 1e-6).pass);
  CHECK(check_spectrum_values(20, std::numeric_limits<double>::denorm_min()).pass);
}

TEST_CASE("suite selection and gating") {
  CHECK_THROWS_AS(resolve_selection({"gf.hermite,nope"}), UsageError);
  CHECK(resolve_selection({}).size() == resolve_selection({"baseline"}).size());
  CHECK(resolve_selection({"all"}).size() == registry().size());
  RunOptions strict;
  strict.tolerance = 1e-300;
  const auto failed = run_suite(resolve_selection({"all"}), strict);
  CHECK_FALSE(failed.baseline_passed);
  CHECK_FALSE(failed.gated_passed);
  for (const auto& r : failed.reports) CHECK(find_check(r.check_id)->baseline);
  RunOptions bad;
  bad.tolerance = -1.0;
  CHECK_THROWS_AS(run_suite({"gf.hermite"}, bad), UsageError);

  const auto info = run_suite({"spectrum.degeneracy"}, {});
  CHECK(info.baseline_passed);
  CHECK(info.gated_passed);
  CHECK_FALSE(info.reports.back().pass);
  CHECK_FALSE(info.reports.back().gated);
}
