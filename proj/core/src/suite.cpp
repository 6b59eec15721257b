#include "gfcs/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "gfcs/checks.hpp"
#include "gfcs/errors.hpp"

namespace gfcs::verify {

namespace {

using genfun::Family;
using genfun::GeneratingFunctionSpec;

constexpr double kPi = std::numbers::pi;

double tol(const RunOptions& o, double pinned) { return o.tolerance.value_or(pinned); }
double beta_or(const RunOptions& o, double d) { return o.beta.value_or(d); }
std::vector<double> lambdas_or(const RunOptions& o, std::vector<double> d) {
  return o.lambda ? std::vector<double>{*o.lambda} : d;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  return v;
}

// pinned orders: enough terms for the requested tolerance at the grid's largest |t|
constexpr int kOrderHermite = 60;
constexpr int kOrderLegendre = 400;
constexpr int kOrderLaguerrePlus = 80;
constexpr int kOrderLaguerreDisc = 400;
constexpr int kOrderBessel = 40;

VerificationReport gf_family(const std::string& id, const std::vector<GeneratingFunctionSpec>& specs,
                             const GfGrid& grid, int order, double t) {
  std::vector<VerificationReport> parts;
  for (const auto& s : specs) parts.push_back(check_gf_identity(s, grid, order, t));
  return merge_reports(id, parts, t);
}

std::vector<GeneratingFunctionSpec> bessel_specs(Family f, const RunOptions& o) {
  std::vector<GeneratingFunctionSpec> v;
  const std::vector<double> betas = o.beta ? std::vector<double>{*o.beta} : std::vector<double>{1.0, 2.0};
  for (int k = 0; k <= 3; ++k) {
    for (double b : betas) v.push_back({f, 0.0, k, b});
  }
  return v;
}

std::vector<CheckEntry> build_registry() {
  std::vector<CheckEntry> r;
  auto add = [&](std::string id, bool baseline, bool gated, std::string desc,
                 std::function<VerificationReport(const RunOptions&)> fn) {
    r.push_back({std::move(id), baseline, gated, std::move(desc), std::move(fn)});
  };

  // ---- baseline self-tests ----
  add("gf.hermite", true, true, "Hermite generating function", [](const RunOptions& o) {
    return gf_family("gf.hermite", {{Family::Hermite}}, make_gf_grid(-3.0, 3.0, 13, 1.5, false), kOrderHermite,
                     tol(o, 1e-10));
  });
  add("gf.laguerre_plus", true, true, "Laguerre generating function with J Bessel closed form",
      [](const RunOptions& o) {
        return gf_family("gf.laguerre_plus",
                         {{Family::LaguerrePlus, 0.5}, {Family::LaguerrePlus, 1.0}, {Family::LaguerrePlus, 2.0}},
                         make_gf_grid(0.0, 8.0, 9, 3.0, true), kOrderLaguerrePlus, tol(o, 1e-8));
      });
  add("gf.laguerre_minus", true, true, "Laguerre generating function (1-z)^{-m-1} e^{-xz/(1-z)}",
      [](const RunOptions& o) {
        std::vector<GeneratingFunctionSpec> s;
        for (double m : {0.0, 1.0, 2.5, 5.0}) s.push_back({Family::LaguerreMinus, m});
        return gf_family("gf.laguerre_minus", s, make_gf_grid(0.0, 5.0, 6, 0.8, false), kOrderLaguerreDisc,
                         tol(o, 1e-8));
      });
  add("gf.laguerre_zero", true, true, "Laguerre generating function (1+z)^m e^{-xz}", [](const RunOptions& o) {
    std::vector<GeneratingFunctionSpec> s;
    for (double m : {0.0, 1.0, 2.5, 5.0}) s.push_back({Family::LaguerreZero, m});
    return gf_family("gf.laguerre_zero", s, make_gf_grid(0.0, 5.0, 6, 0.8, false), kOrderLaguerreDisc,
                     tol(o, 1e-8));
  });
  add("ladder.harmonic_oscillator", true, true, "[a, a+] = 1 on a random window vector", [](const RunOptions& o) {
    return check_commutators(Algebra::HarmonicOscillator, 60, 1.0, o.seed, tol(o, 1e-12));
  });
  add("eigen.canonical", true, true, "canonical state is an a-eigenvector", [](const RunOptions& o) {
    return check_eigen(EigenFamily::Canonical, {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.5}, {-1.2, 0.7}, {2.0, -1.0}},
                       o.truncation.value_or(60), 1.0, 0, tol(o, 1e-12));
  });
  add("moment.sho", true, true, "Gaussian measure moments n! (harness self-test)", [](const RunOptions& o) {
    return check_moment_resolution(MomentFamily::SHO, 0, 0, 10, tol(o, 1e-10));
  });
  add("ortho.laguerre", true, true, "Calogero-Sutherland basis orthonormality, lambda = 1, n <= 6",
      [](const RunOptions& o) {
        OrthoParams p;
        p.lambda = 1.0;
        return check_orthogonality(OrthoModel::CalogeroSutherland, p, 6, tol(o, 1e-8));
      });

  // ---- generating functions ----
  add("gf.legendre", false, true, "associated Legendre generating function, m <= 4", [](const RunOptions& o) {
    std::vector<GeneratingFunctionSpec> s;
    for (int m = 0; m <= 4; ++m) s.push_back({Family::LegendreM, static_cast<double>(m)});
    return gf_family("gf.legendre", s, make_gf_grid(-0.9, 0.9, 7, 0.8, false), kOrderLegendre, tol(o, 1e-8));
  });
  add("gf.bessel_even", false, true, "even associated Bessel generating function, k <= 3", [](const RunOptions& o) {
    return gf_family("gf.bessel_even", bessel_specs(Family::BesselEven, o), make_gf_grid(0.2, 4.0, 6, 0.5, false),
                     kOrderBessel, tol(o, 1e-8));
  });
  add("gf.bessel_odd", false, true, "odd associated Bessel generating function, k <= 3", [](const RunOptions& o) {
    return gf_family("gf.bessel_odd", bessel_specs(Family::BesselOdd, o), make_gf_grid(0.2, 4.0, 6, 0.5, false),
                     kOrderBessel, tol(o, 1e-8));
  });
  add("gf.bessel_half_powers", false, true, "no half-integer powers of t survive", [](const RunOptions& o) {
    auto s = bessel_specs(Family::BesselEven, o);
    auto odd = bessel_specs(Family::BesselOdd, o);
    s.insert(s.end(), odd.begin(), odd.end());
    return check_bessel_half_powers(s, linspace(0.2, 4.0, 6), kOrderBessel, tol(o, 1e-9));
  });

  // ---- ladders and eigenvectors ----
  add("ladder.su11", false, true, "su(1,1) closure of J+, J-, J3", [](const RunOptions& o) {
    std::vector<VerificationReport> parts;
    for (double l : lambdas_or(o, {0.7, 1.5, 3.0})) {
      parts.push_back(check_commutators(Algebra::SU11, 60, l, o.seed, tol(o, 1e-12)));
    }
    return merge_reports("ladder.su11", parts, tol(o, 1e-12));
  });
  add("ladder.weyl_heisenberg", false, true, "two commuting Weyl-Heisenberg pairs on Landau labels",
      [](const RunOptions& o) { return check_commutators(Algebra::WeylHeisenberg, 12, 1.0, o.seed, tol(o, 1e-12)); });
  add("eigen.bg", false, true, "Barut-Girardello state is a J- eigenvector with eigenvalue -z",
      [](const RunOptions& o) {
        std::vector<VerificationReport> parts;
        for (double l : lambdas_or(o, {0.7, 1.5, 3.0})) {
          parts.push_back(check_eigen(EigenFamily::BarutGirardello, {{0.3, 0.0}, {0.0, 0.8}, {-1.5, 0.5}},
                                      o.truncation.value_or(60), l, 0, tol(o, 1e-12)));
        }
        return merge_reports("eigen.bg", parts, tol(o, 1e-12));
      });
  add("eigen.landau_a", false, true, "Landau chain is an a-eigenvector with eigenvalue w", [](const RunOptions& o) {
    std::vector<VerificationReport> parts;
    for (int m : {0, 1, 3}) {
      parts.push_back(check_eigen(EigenFamily::LandauA, {{0.0, 0.0}, {0.4, 0.0}, {0.3, -0.6}, {1.1, 0.2}},
                                  o.truncation.value_or(60), 1.0, m, tol(o, 1e-12)));
    }
    return merge_reports("eigen.landau_a", parts, tol(o, 1e-12));
  });
  add("eigen.landau_b", false, false, "b-ladder residual on the Landau chain (informational)",
      [](const RunOptions& o) {
        return check_eigen(EigenFamily::LandauB, {{0.4, 0.0}, {0.3, -0.6}}, o.truncation.value_or(60), 1.0, 1,
                           tol(o, 1e-12));
      });

  // ---- correspondences ----
  add("corr.sho", false, true, "canonical state vs Hermite generating function", [](const RunOptions& o) {
    CorrespondenceParams p;
    p.truncation = o.truncation.value_or(0);
    return check_state_gf_correspondence(Correspondence::SHO, p,
                                         {linspace(-2.0, 2.0, 9), {0.0}, {{0.5, 0.0}, {0.0, 0.5}, {-0.3, 0.4}}},
                                         tol(o, 1e-8));
  });
  add("corr.sphere", false, true, "spherical-harmonic state vs Legendre generating function, m <= 3",
      [](const RunOptions& o) {
        std::vector<VerificationReport> parts;
        for (int m = 0; m <= 3; ++m) {
          CorrespondenceParams p;
          p.m = m;
          p.truncation = o.truncation.value_or(0);
          parts.push_back(check_state_gf_correspondence(
              Correspondence::Sphere, p, {linspace(0.2, 2.9, 5), {0.0, 1.1}, {{0.3, 0.0}, {0.0, 0.5}, {-0.4, 0.3}}},
              tol(o, 1e-8)));
        }
        return merge_reports("corr.sphere", parts, tol(o, 1e-8));
      });
  add("corr.bg", false, true, "Barut-Girardello state vs Laguerre generating function", [](const RunOptions& o) {
    std::vector<VerificationReport> parts;
    for (double l : lambdas_or(o, {0.8, 1.5})) {
      CorrespondenceParams p;
      p.lambda = l;
      p.truncation = o.truncation.value_or(0);
      parts.push_back(check_state_gf_correspondence(
          Correspondence::BarutGirardello, p,
          {linspace(0.5, 2.0, 7), {0.0}, {{0.0, 0.0}, {0.2, 0.0}, {0.4, 0.0}, {0.6, 0.0}, {0.8, 0.0}}}, tol(o, 1e-8)));
    }
    return merge_reports("corr.bg", parts, tol(o, 1e-8));
  });
  add("corr.kp", false, true, "Klauder-Perelomov state vs Laguerre generating function", [](const RunOptions& o) {
    std::vector<VerificationReport> parts;
    for (double l : lambdas_or(o, {0.8, 1.5})) {
      CorrespondenceParams p;
      p.lambda = l;
      p.truncation = o.truncation.value_or(0);
      parts.push_back(check_state_gf_correspondence(
          Correspondence::KlauderPerelomov, p,
          {linspace(0.5, 2.0, 7), {0.0}, {{0.0, 0.0}, {0.2, 0.0}, {0.4, 0.0}, {-0.3, 0.5}, {0.8, 0.0}}},
          tol(o, 1e-8)));
    }
    return merge_reports("corr.kp", parts, tol(o, 1e-8));
  });
  add("corr.landau", false, true, "Landau chain vs Laguerre generating function", [](const RunOptions& o) {
    std::vector<VerificationReport> parts;
    for (int m : {0, 1, 2, 3}) {
      CorrespondenceParams p;
      p.m = m;
      p.truncation = o.truncation.value_or(0);
      parts.push_back(check_state_gf_correspondence(
          Correspondence::Landau, p,
          {linspace(0.5, 2.0, 7), {0.0, 0.7}, {{0.1, 0.0}, {0.35, 0.0}, {0.6, 0.0}}}, tol(o, 1e-8)));
    }
    return merge_reports("corr.landau", parts, tol(o, 1e-8));
  });
  add("corr.flatband", false, false, "flat-band states vs even Bessel generating function (informational)",
      [](const RunOptions& o) {
        std::vector<VerificationReport> parts;
        const std::vector<double> betas = o.beta ? std::vector<double>{*o.beta} : std::vector<double>{1.0, 2.0};
        for (int k = 0; k <= 2; ++k) {
          for (double b : betas) {
            CorrespondenceParams p;
            p.k = k;
            p.beta = b;
            p.truncation = o.truncation.value_or(0);
            parts.push_back(check_state_gf_correspondence(Correspondence::FlatBandEven, p,
                                                          {{-0.5, 0.0, 0.7}, {0.0, 0.9}, {{0.1, 0.0}, {0.3, 0.0}}},
                                                          tol(o, 1e-8)));
          }
        }
        return merge_reports("corr.flatband", parts, tol(o, 1e-8));
      });

  // ---- sphere normalisation, overlaps, measure ----
  const std::vector<std::complex<double>> disc_args = {
      {0.0, 0.0}, {0.3, 0.0}, {0.0, -0.6}, {0.5, 0.5}, {-0.9, 0.0}, {0.0, 0.9}};
  add("norm.legendre_series", false, true, "spherical-harmonic states normalised, m <= 5, |z| <= 0.9",
      [disc_args](const RunOptions& o) { return check_legendre_self_norm(5, disc_args, tol(o, 1e-10)); });
  add("norm.legendre_printed_m0", false, true, "printed normalisation at m = 0 vs the series",
      [](const RunOptions& o) {
        auto r = check_legendre_norm_form(LegendreForm::Printed, {0}, {0.0, 0.1, 0.5, 0.7, 0.9}, tol(o, 1e-10));
        r.check_id = "norm.legendre_printed_m0";
        return r;
      });
  add("norm.legendre_printed", false, false, "printed normalisation for m >= 1 vs the series (informational)",
      [](const RunOptions& o) {
        return check_legendre_norm_form(LegendreForm::Printed, {1, 2, 3}, {0.1, 0.5, 0.9}, tol(o, 1e-10));
      });
  add("norm.legendre_closed", false, true, "closed form (2m)!/(2m+1) r^{2m} 2F1(2m+1, m+1/2; m+3/2; r^2) vs series",
      [](const RunOptions& o) {
        return check_legendre_norm_form(LegendreForm::Closed, {0, 1, 2, 3, 4, 5}, {0.1, 0.5, 0.7, 0.9},
                                        tol(o, 1e-10));
      });
  const std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs = {
      {{0.3, 0.0}, {0.3, 0.0}}, {{0.2, 0.1}, {0.5, -0.3}}, {{0.6, 0.0}, {-0.5, 0.0}}, {{0.0, 0.7}, {0.4, 0.4}}};
  add("overlap.legendre_printed_m0", false, true, "printed overlap kernel at m = 0", [pairs](const RunOptions& o) {
    auto r = check_overlap(0, pairs, tol(o, 1e-9), LegendreForm::Printed);
    r.check_id = "overlap.legendre_printed_m0";
    return r;
  });
  add("overlap.legendre_printed", false, false, "printed overlap kernel for m = 1, 2 (informational)",
      [pairs](const RunOptions& o) {
        std::vector<VerificationReport> parts;
        for (int m : {1, 2}) parts.push_back(check_overlap(m, pairs, tol(o, 1e-9), LegendreForm::Printed));
        return merge_reports("overlap.legendre_printed", parts, tol(o, 1e-9));
      });
  add("overlap.legendre_closed", false, true, "overlap kernel with the closed-form parameters, m <= 3",
      [pairs](const RunOptions& o) {
        std::vector<VerificationReport> parts;
        for (int m = 0; m <= 3; ++m) parts.push_back(check_overlap(m, pairs, tol(o, 1e-9), LegendreForm::Closed));
        return merge_reports("overlap.legendre_closed", parts, tol(o, 1e-9));
      });
  add("measure.legendre_lines", false, false, "the two printed lines of the disc measure (informational)",
      [](const RunOptions& o) {
        return check_legendre_measure_lines({1, 2}, {0.1, 0.5, 0.9}, tol(o, 1e-10));
      });

  // ---- resolution of identity ----
  add("moment.flatband_even", false, true, "even flat-band measure moments (2m+1)!, m <= 8", [](const RunOptions& o) {
    return check_moment_resolution(MomentFamily::FlatBandEven, 0, 0, 8, tol(o, 1e-8));
  });
  add("moment.flatband_odd_printed", false, false, "odd flat-band printed measure (informational)",
      [](const RunOptions& o) {
        return check_moment_resolution(MomentFamily::FlatBandOddPrinted, 0, 0, 8, tol(o, 1e-8));
      });
  add("moment.flatband_odd_corrected", false, false, "odd flat-band measure with 1/r (informational)",
      [](const RunOptions& o) {
        return check_moment_resolution(MomentFamily::FlatBandOddCorrected, 0, 0, 8, tol(o, 1e-8));
      });
  for (int m : {1, 2}) {
    for (int line : {1, 2}) {
      const std::string id = "moment.legendre_line" + std::to_string(line) + "_m" + std::to_string(m);
      add(id, false, false, "disc measure moments, printed line " + std::to_string(line) + " (informational)",
          [id, m, line](const RunOptions& o) {
            auto r = check_moment_resolution(line == 1 ? MomentFamily::SphereFirstLine : MomentFamily::SphereSecondLine,
                                             m, m, m + 6, tol(o, 1e-8));
            r.check_id = id;
            return r;
          });
    }
  }

  // ---- orthogonality ----
  add("ortho.laguerre_lambda", false, true, "Calogero-Sutherland basis, lambda in {0.7, 1.5, 3}, n <= 8",
      [](const RunOptions& o) {
        std::vector<VerificationReport> parts;
        for (double l : lambdas_or(o, {0.7, 1.5, 3.0})) {
          OrthoParams p;
          p.lambda = l;
          parts.push_back(check_orthogonality(OrthoModel::CalogeroSutherland, p, 8, tol(o, 1e-8)));
        }
        return merge_reports("ortho.laguerre_lambda", parts, tol(o, 1e-8));
      });
  add("ortho.sphere", false, true, "spherical harmonics, l <= 6", [](const RunOptions& o) {
    return check_orthogonality(OrthoModel::Sphere, {}, 6, tol(o, 1e-8));
  });
  add("ortho.landau", false, true, "Landau functions, n, n+m <= 6", [](const RunOptions& o) {
    return check_orthogonality(OrthoModel::Landau, {}, 6, tol(o, 1e-8));
  });
  for (bool even : {true, false}) {
    for (bool printed : {false, true}) {
      std::string id = even ? "ortho.flatband_even" : "ortho.flatband_odd";
      if (printed) id += "_printed_a";
      add(id, false, !printed,
          std::string(even ? "even" : "odd") + " flat-band basis, k = 1, m <= 4" +
              (printed ? " with the printed a_{l,m} (informational)" : ""),
          [even, printed](const RunOptions& o) {
            OrthoParams p;
            p.k = 1;
            p.beta = beta_or(o, 2.0);
            p.bessel_printed_norm = printed;
            return check_orthogonality(even ? OrthoModel::FlatBandEven : OrthoModel::FlatBandOdd, p, 4, tol(o, 1e-6));
          });
    }
  }

  // ---- spectrum ----
  add("spectrum.values", false, true, "E_{l,m} against direct substitution, exact", [](const RunOptions& o) {
    return check_spectrum_values(20, tol(o, std::numeric_limits<double>::denorm_min()));
  });
  add("spectrum.degeneracy", false, false, "degeneracy claim over |l|, |m| <= 20 (informational)",
      [](const RunOptions&) { return check_degeneracy(-20, 20, -20, 20); });
  add("spectrum.degeneracy_nonneg", false, false, "degeneracy claim over 0 <= l <= 20, |m| <= 20 (informational)",
      [](const RunOptions&) {
        auto r = check_degeneracy(0, 20, -20, 20);
        r.check_id = "spectrum.degeneracy_nonneg";
        return r;
      });
  return r;
}

}  // namespace

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> reg = build_registry();
  return reg;
}

const CheckEntry* find_check(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<std::string> resolve_selection(const std::vector<std::string>& selection) {
  std::vector<std::string> tokens;
  for (const auto& s : selection) {
    std::string cur;
    for (char c : s + ",") {
      if (c == ',' || c == ' ' || c == '\t') {
        if (!cur.empty()) tokens.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  if (tokens.empty()) tokens.push_back("baseline");
  std::set<std::string> wanted;
  for (const auto& t : tokens) {
    if (t == "all") {
      for (const auto& e : registry()) wanted.insert(e.id);
    } else if (t == "baseline") {
      for (const auto& e : registry()) {
        if (e.baseline) wanted.insert(e.id);
      }
    } else if (find_check(t) != nullptr) {
      wanted.insert(t);
    } else {
      throw UsageError("unknown check id '" + t + "'");
    }
  }
  std::vector<std::string> out;
  for (const auto& e : registry()) {
    if (wanted.count(e.id)) out.push_back(e.id);
  }
  return out;
}

SuiteResult run_suite(const std::vector<std::string>& ids, const RunOptions& options) {
  for (const auto& id : ids) {
    if (find_check(id) == nullptr) throw UsageError("unknown check id '" + id + "'");
  }
  if (options.tolerance && !(*options.tolerance > 0.0)) throw UsageError("tolerance must be > 0");
  if (options.beta && !(*options.beta > 0.0)) throw UsageError("beta must be > 0");
  if (options.lambda && !(*options.lambda > -0.5)) throw UsageError("lambda must be > -1/2");
  if (options.truncation && *options.truncation < 1) throw UsageError("truncation must be >= 1");

  SuiteResult result;
  auto execute = [&](const CheckEntry& e) {
    VerificationReport rep;
    try {
      rep = e.run(options);
      rep.check_id = e.id;
    } catch (const std::exception& ex) {
      rep = VerificationReport{};
      rep.check_id = e.id;
      rep.tolerance = options.tolerance.value_or(1.0);
      rep.residuals.push_back(std::numeric_limits<double>::infinity());
      rep.finalize();
      rep.notes.push_back(std::string("runtime error: ") + ex.what());
      result.errors.push_back(e.id + ": " + ex.what());
    }
    rep.gated = e.gated;
    if (!e.gated) rep.notes.insert(rep.notes.begin(), "informational: does not affect the exit status");
    if (e.gated && !rep.pass) result.gated_passed = false;
    result.reports.push_back(std::move(rep));
  };

  for (const auto& e : registry()) {
    if (!e.baseline) continue;
    execute(e);
    if (!result.reports.back().pass) result.baseline_passed = false;
  }
  if (!result.baseline_passed) {
    result.gated_passed = false;
    return result;
  }
  for (const auto& id : ids) {
    const auto* e = find_check(id);
    if (e->baseline) continue;
    execute(*e);
  }
  return result;
}

}  // namespace gfcs::verify
