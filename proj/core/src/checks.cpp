#include "gfcs/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "gfcs/errors.hpp"
#include "gfcs/quadrature.hpp"
#include "gfcs/specfun.hpp"
#include "gfcs/spectrum.hpp"
#include "gfcs/states.hpp"

namespace gfcs::verify {

namespace {

using fock::CoefficientSeries;
using fock::Family;
using fock::QuantumLabel;
using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

VerificationReport start(std::string id, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("check: tolerance must be > 0");
  VerificationReport r;
  r.check_id = std::move(id);
  r.tolerance = tolerance;
  return r;
}

std::string fmt(double v) { return format_double(v); }

std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i";
}

// short decimal for notes
std::string fmt6(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(6);
  os << v;
  return os.str();
}

std::string fmt6(cplx z) {
  if (z.imag() == 0.0) return fmt6(z.real());
  return fmt6(z.real()) + (z.imag() < 0 ? "" : "+") + fmt6(z.imag()) + "i";
}

json cplx_list(const std::vector<cplx>& zs) {
  json a = json::array();
  for (auto z : zs) a.push_back(fmt(z));
  return a;
}

double rel_residual(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)); }

double max_abs(const CoefficientSeries& s) {
  double m = 0.0;
  for (const auto& t : s.terms()) m = std::max(m, std::abs(t.coefficient));
  return m;
}

// uniform in [-1, 1) from the top 53 bits; independent of the library's distributions
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; }

CoefficientSeries random_series(Family family, const std::vector<QuantumLabel>& labels, int truncation,
                                const fock::FamilyParams& params, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<fock::Term> terms;
  for (const auto& l : labels) {
    const double re = unit(rng);
    const double im = unit(rng);
    terms.push_back({l, {re, im}});
  }
  return CoefficientSeries(family, std::move(terms), truncation, params);
}

using fock::ladder_apply;

CoefficientSeries commutator(const fock::LadderSpec& x, const fock::LadderSpec& y, const CoefficientSeries& s) {
  return fock::combine(1.0, ladder_apply(x, ladder_apply(y, s)), -1.0, ladder_apply(y, ladder_apply(x, s)));
}

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::HarmonicOscillator: return "harmonic-oscillator";
    case Algebra::SU11: return "su11";
    case Algebra::WeylHeisenberg: return "weyl-heisenberg";
  }
  return "?";
}

int default_entire(double a) { return states::default_truncation_entire(a); }

}  // namespace

// --- generating functions --------------------------------------------------------

GfGrid make_gf_grid(double x_lo, double x_hi, int nx, double radius, bool real_only) {
  if (nx < 1 || !(radius >= 0.0) || x_hi < x_lo) throw DomainError("make_gf_grid: bad grid");
  GfGrid g;
  for (int i = 0; i < nx; ++i) {
    g.xs.push_back(nx == 1 ? x_lo : x_lo + (x_hi - x_lo) * i / (nx - 1));
  }
  if (real_only) {
    for (int j = -3; j <= 3; ++j) g.ts.emplace_back(radius * j / 3.0, 0.0);
    return g;
  }
  g.ts.emplace_back(0.0, 0.0);
  for (double rho : {0.5 * radius, radius}) {
    for (int j = 0; j < 8; ++j) g.ts.push_back(std::polar(rho, 2.0 * kPi * j / 8.0 + 0.3));
  }
  return g;
}

VerificationReport check_gf_identity(const genfun::GeneratingFunctionSpec& spec, const GfGrid& grid, int order,
                                     double tolerance) {
  if (grid.xs.empty() || grid.ts.empty()) throw DomainError("check_gf_identity: empty grid");
  auto r = start(std::string("gf.") + std::string(genfun::to_string(spec.family)), tolerance);
  r.params["family"] = std::string(genfun::to_string(spec.family));
  r.params["m"] = spec.m;
  r.params["k"] = spec.k;
  r.params["beta"] = spec.beta;
  r.params["order"] = order;
  double worst_tail = 0.0;
  for (double x : grid.xs) {
    for (cplx t : grid.ts) {
      const cplx closed = genfun::gf_closed(spec, x, t);
      const auto series = genfun::gf_series(spec, x, t, order);
      r.residuals.push_back(rel_residual(closed, series.partial_sum));
      worst_tail = std::max(worst_tail, series.last_term_magnitude);
    }
  }
  double xmin = *std::min_element(grid.xs.begin(), grid.xs.end());
  double xmax = *std::max_element(grid.xs.begin(), grid.xs.end());
  double tmax = 0.0;
  for (auto t : grid.ts) tmax = std::max(tmax, std::abs(t));
  r.grid_summary = std::to_string(grid.xs.size()) + " x in [" + fmt(xmin) + "," + fmt(xmax) + "] by " +
                   std::to_string(grid.ts.size()) + " t with |t| <= " + fmt(tmax);
  r.notes.push_back("largest last included term " + fmt6(worst_tail));
  r.finalize();
  return r;
}

VerificationReport merge_reports(const std::string& check_id, const std::vector<VerificationReport>& parts,
                                 double tolerance) {
  auto r = start(check_id, tolerance);
  r.params = json::array();
  std::string grid;
  for (const auto& p : parts) {
    r.params.push_back(p.params);
    r.residuals.insert(r.residuals.end(), p.residuals.begin(), p.residuals.end());
    if (grid.empty()) grid = p.grid_summary;
    for (const auto& n : p.notes) r.notes.push_back(n);
  }
  r.grid_summary = std::to_string(parts.size()) + " parameter sets, each " + grid;
  r.finalize();
  return r;
}

VerificationReport check_bessel_half_powers(const std::vector<genfun::GeneratingFunctionSpec>& specs,
                                            const std::vector<double>& xs, int order, double tolerance) {
  auto r = start("gf.bessel_half_powers", tolerance);
  r.params["order"] = order;
  r.params["sets"] = specs.size();
  for (const auto& s : specs) {
    for (double x : xs) r.residuals.push_back(genfun::bessel_half_power_residual(s, x, order));
  }
  r.grid_summary = std::to_string(specs.size()) + " (family,k,beta) by " + std::to_string(xs.size()) + " x";
  r.finalize();
  return r;
}

// --- ladders ---------------------------------------------------------------------

VerificationReport check_commutators(Algebra algebra, int window, double lambda, unsigned long long seed,
                                     double tolerance) {
  if (window < 1) throw DomainError("check_commutators: window >= 1");
  auto r = start("ladder." + algebra_name(algebra), tolerance);
  r.params["window"] = window;
  r.params["seed"] = seed;
  auto record = [&](const std::string& name, const CoefficientSeries& lhs, const CoefficientSeries& rhs) {
    const auto diff = fock::combine(1.0, lhs, -1.0, rhs);
    const double v = max_abs(diff);
    r.residuals.push_back(v);
    r.notes.push_back(name + ": " + fmt6(v));
  };

  switch (algebra) {
    case Algebra::HarmonicOscillator: {
      std::vector<QuantumLabel> labels;
      for (int n = 0; n <= window; ++n) labels.push_back({Family::SHO, n, 0});
      const auto s = random_series(Family::SHO, labels, window, {}, seed);
      record("[a,a+] - 1", commutator(fock::ladders::sho_lower(), fock::ladders::sho_raise(), s), s);
      r.grid_summary = "random vector on n = 0.." + std::to_string(window);
      break;
    }
    case Algebra::SU11: {
      r.params["lambda"] = lambda;
      std::vector<QuantumLabel> labels;
      for (int n = 0; n <= window; ++n) labels.push_back({Family::CalogeroSutherland, n, 0});
      fock::FamilyParams p;
      p.lambda = lambda;
      const auto s = random_series(Family::CalogeroSutherland, labels, window, p, seed);
      const auto jm = fock::ladders::su11_lower(lambda);
      const auto jp = fock::ladders::su11_raise(lambda);
      const auto j3 = fock::ladders::su11_diagonal(lambda);
      record("[J+,J-] + 2 J3", commutator(jp, jm, s), fock::combine(0.0, s, -2.0, ladder_apply(j3, s)));
      record("[J3,J+] - J+", commutator(j3, jp, s), ladder_apply(jp, s));
      record("[J3,J-] + J-", commutator(j3, jm, s), fock::combine(0.0, s, -1.0, ladder_apply(jm, s)));
      r.grid_summary = "random vector on n = 0.." + std::to_string(window);
      break;
    }
    case Algebra::WeylHeisenberg: {
      std::vector<QuantumLabel> labels;
      for (int n = 0; n <= window; ++n) {
        for (int m = -n; n + m <= window; ++m) labels.push_back({Family::Landau, n, m});
      }
      const auto s = random_series(Family::Landau, labels, window, {}, seed);
      const CoefficientSeries zero = fock::combine(0.0, s, 0.0, s);
      using namespace fock::ladders;
      record("[a,a+] - 1", commutator(landau_a(), landau_a_dag(), s), s);
      record("[b,b+] - 1", commutator(landau_b(), landau_b_dag(), s), s);
      record("[a,b+]", commutator(landau_a(), landau_b_dag(), s), zero);
      record("[a+,b]", commutator(landau_a_dag(), landau_b(), s), zero);
      record("[a,b]", commutator(landau_a(), landau_b(), s), zero);
      record("[a+,b+]", commutator(landau_a_dag(), landau_b_dag(), s), zero);
      r.grid_summary = "random vector on " + std::to_string(labels.size()) + " labels n, n+m <= " +
                       std::to_string(window);
      break;
    }
  }
  r.finalize();
  return r;
}

VerificationReport check_eigen(EigenFamily family, const std::vector<cplx>& args, int truncation, double lambda,
                               int landau_m, double tolerance) {
  if (args.empty()) throw DomainError("check_eigen: empty grid");
  static const char* names[] = {"eigen.canonical", "eigen.bg", "eigen.landau_a", "eigen.landau_b"};
  auto r = start(names[static_cast<int>(family)], tolerance);
  r.params["truncation"] = truncation;
  r.params["args"] = cplx_list(args);
  for (cplx z : args) {
    switch (family) {
      case EigenFamily::Canonical:
        r.residuals.push_back(fock::eigen_residual(fock::ladders::sho_lower(), states::canonical_cs(z, truncation), z));
        break;
      case EigenFamily::BarutGirardello:
        r.residuals.push_back(
            fock::eigen_residual(fock::ladders::su11_lower(lambda), states::cs_bg(lambda, z, truncation), -z));
        break;
      case EigenFamily::LandauA:
        r.residuals.push_back(
            fock::eigen_residual(fock::ladders::landau_a(), states::landau_cs(landau_m, z, truncation), z));
        break;
      case EigenFamily::LandauB: {
        const auto s = states::landau_cs(landau_m, z, truncation);
        const auto bs = ladder_apply(fock::ladders::landau_b(), s);
        // best eigenvalue in the least-squares sense; the images leave the chain
        const cplx ev = fock::inner_product(s, bs) / s.norm_squared();
        const double res = fock::eigen_residual(fock::ladders::landau_b(), s, ev);
        r.residuals.push_back(res);
        r.notes.push_back("w=" + fmt6(z) + ": <s|b s>/<s|s> = " + fmt6(ev) + ", residual " + fmt6(res));
        break;
      }
    }
  }
  if (family == EigenFamily::BarutGirardello) r.params["lambda"] = lambda;
  if (family == EigenFamily::LandauA || family == EigenFamily::LandauB) {
    r.params["m"] = landau_m;
    if (family == EigenFamily::LandauB) {
      r.notes.push_back("b maps |j, m-j> to |j, m-j-1>, off the chain {|j, m-j>}; the chain is an a-eigenvector");
    }
  }
  r.grid_summary = std::to_string(args.size()) + " arguments, retained labels below the truncation";
  r.finalize();
  return r;
}

// --- correspondences -------------------------------------------------------------

VerificationReport check_state_gf_correspondence(Correspondence family, const CorrespondenceParams& p,
                                                 const CorrespondenceGrid& grid, double tolerance) {
  if (grid.coord1.empty() || grid.coord2.empty() || grid.args.empty()) {
    throw DomainError("check_state_gf_correspondence: empty grid");
  }
  static const char* names[] = {"corr.sho", "corr.sphere", "corr.bg", "corr.kp", "corr.landau", "corr.flatband"};
  auto r = start(names[static_cast<int>(family)], tolerance);
  r.grid_summary = std::to_string(grid.coord1.size()) + " by " + std::to_string(grid.coord2.size()) +
                   " points by " + std::to_string(grid.args.size()) + " arguments";
  r.params["args"] = cplx_list(grid.args);
  auto trunc_or = [&](int def) { return p.truncation > 0 ? p.truncation : def; };
  double printed_worst = 0.0;  // alternative printed forms, reported in the notes

  for (cplx z : grid.args) {
    for (double a : grid.coord1) {
      for (double b : grid.coord2) {
        switch (family) {
          case Correspondence::SHO: {
            const cplx lhs = std::pow(kPi, -0.25) * std::exp(-0.5 * (a * a + std::norm(z))) *
                             genfun::gf_closed({genfun::Family::Hermite}, a, z / std::sqrt(2.0));
            const auto s = states::canonical_cs(z, trunc_or(default_entire(std::abs(z))));
            r.residuals.push_back(rel_residual(lhs, states::cs_wavefunction(s, states::LinePoint{a})));
            break;
          }
          case Correspondence::Sphere: {
            genfun::GeneratingFunctionSpec g{genfun::Family::LegendreM, static_cast<double>(p.m)};
            const double sign = p.m % 2 == 0 ? 1.0 : -1.0;
            const cplx lhs = std::pow(z, p.m) * sign * std::polar(1.0, p.m * b) / std::sqrt(4.0 * kPi) *
                             genfun::gf_closed(g, std::cos(a), z);
            const auto s = states::legendre_cs(p.m, z, trunc_or(states::legendre_truncation(p.m, std::abs(z))));
            const cplx rhs = states::cs_wavefunction(s, states::SpherePoint{a, b}) / s.normalization();
            r.residuals.push_back(rel_residual(lhs, rhs));
            break;
          }
          case Correspondence::BarutGirardello:
          case Correspondence::KlauderPerelomov: {
            const bool kp = family == Correspondence::KlauderPerelomov;
            genfun::GeneratingFunctionSpec g{kp ? genfun::Family::LaguerreMinus : genfun::Family::LaguerrePlus,
                                             p.lambda - 0.5};
            const double pre = std::sqrt(2.0) * std::pow(a, p.lambda) * std::exp(-0.5 * a * a);
            const cplx lhs = pre * genfun::gf_closed(g, a * a, z);
            const auto s = kp ? states::cs_kp(p.lambda, z, trunc_or(states::default_truncation_disc(std::abs(z))))
                              : states::cs_bg(p.lambda, z, trunc_or(default_entire(std::abs(z))));
            const cplx rhs = states::cs_wavefunction(s, states::LinePoint{a}) / s.normalization();
            r.residuals.push_back(rel_residual(lhs, rhs));
            if (kp) {
              // explicit printed form with the (1 + 2z/(1-z)) exponent
              const cplx explicit_form = std::sqrt(2.0) * std::pow(a, p.lambda) *
                                         std::exp(-0.5 * a * a * (1.0 + 2.0 * z / (1.0 - z))) /
                                         std::pow(1.0 - z, p.lambda + 0.5);
              printed_worst = std::max(printed_worst, rel_residual(explicit_form, rhs));
            }
            break;
          }
          case Correspondence::Landau: {
            const double c = p.landau_scale;
            const double rho = c * a * a;
            genfun::GeneratingFunctionSpec g{genfun::Family::LaguerreZero, static_cast<double>(p.m)};
            const cplx core = std::pow(z, -p.m) * std::exp(-0.5 * rho) * genfun::gf_closed(g, rho, z);
            const cplx lhs = std::sqrt(c / kPi) * core;
            const cplx w = z * std::polar(1.0, b) * std::sqrt(c) * a;
            const auto s = states::landau_cs(p.m, w, trunc_or(default_entire(std::abs(w))), c);
            const cplx rhs = states::cs_wavefunction(s, states::PolarPoint{a, b}) /
                             (s.normalization() * std::pow(w, p.m));
            r.residuals.push_back(rel_residual(lhs, rhs));
            printed_worst = std::max(printed_worst, rel_residual(std::sqrt(1.0 / (2.0 * kPi)) * core, rhs));
            break;
          }
          case Correspondence::FlatBandEven: {
            genfun::GeneratingFunctionSpec g{genfun::Family::BesselEven, 0.0, p.k, p.beta};
            const double xi = std::exp(a);
            const cplx lhs = p.beta * std::polar(1.0, -(p.k + 1.0) * b) /
                             std::sqrt(2.0 * kPi * std::exp(specfun::log_factorial(2 * p.k))) *
                             genfun::gf_closed(g, xi, z);
            const cplx arg = p.beta * z * std::polar(1.0, b);
            const auto s = states::bessel_cs(Family::FlatBandEven, p.k, arg,
                                             trunc_or(default_entire(std::abs(arg))), p.beta);
            const cplx rhs = states::cs_wavefunction(s, states::BandPoint{a, b}) / s.normalization();
            r.residuals.push_back(rel_residual(lhs, rhs));
            break;
          }
        }
      }
    }
  }

  switch (family) {
    case Correspondence::SHO:
      r.notes.push_back("closed side: Hermite generating function at t = z/sqrt(2); series side: Hermite functions");
      break;
    case Correspondence::Sphere:
      r.params["m"] = p.m;
      r.notes.push_back("closed side multiplied by z^m to match the l >= m labelling of the state");
      break;
    case Correspondence::BarutGirardello:
      r.params["lambda"] = p.lambda;
      r.notes.push_back("closed side through J_{lambda-1/2}; the printed intermediate x^{1/4} z^{(1-2 lambda)/4} form "
                        "is not used (its x power does not match the J argument)");
      break;
    case Correspondence::KlauderPerelomov:
      r.params["lambda"] = p.lambda;
      r.notes.push_back("explicit printed exponential form vs series: max residual " + fmt6(printed_worst));
      break;
    case Correspondence::Landau:
      r.params["m"] = p.m;
      r.params["landau_scale"] = p.landau_scale;
      r.notes.push_back("identity closes with prefactor sqrt(c/pi), c = M omega/(2 hbar), on the chain n = -m..N "
                        "with normalised Landau functions sqrt(N!/(N+M)!)");
      r.notes.push_back("printed prefactor sqrt(1/(2 pi)) instead: max residual " + fmt6(printed_worst) +
                        " (off by sqrt(2c))");
      break;
    case Correspondence::FlatBandEven: {
      r.params["k"] = p.k;
      r.params["beta"] = p.beta;
      r.gated = false;
      // per-power ratio of the two sides' t^m coefficients
      const int mmax = 5;
      const double xi = std::exp(0.3);
      genfun::GeneratingFunctionSpec g{genfun::Family::BesselEven, 0.0, p.k, p.beta};
      const auto taylor = genfun::extract_taylor(g, xi, mmax);
      const auto bvals = genfun::assoc_bessel_sequence(p.k, genfun::Parity::Even, mmax, p.beta, xi);
      std::string ratios;
      double worst_vs_prediction = 0.0;
      for (int m = 0; m <= mmax; ++m) {
        const double lhs_c = std::real(taylor.coefficients[static_cast<std::size_t>(m)]) /
                             std::sqrt(std::exp(specfun::log_factorial(2 * p.k)));
        const double rhs_c = std::pow(p.beta, m) * bvals[static_cast<std::size_t>(m)] /
                             std::sqrt(std::exp(specfun::log_factorial(2 * m + 1)));
        const double predicted =
            std::pow(p.beta, 1 - p.k) * (m < p.k && (m + p.k + 1) % 2 != 0 ? -1.0 : 1.0);
        worst_vs_prediction = std::max(worst_vs_prediction, std::abs(lhs_c / rhs_c / predicted - 1.0));
        ratios += (m ? ", " : "") + ("m=" + std::to_string(m) + ": " + fmt6(lhs_c / rhs_c));
      }
      r.notes.push_back("t^m coefficient ratio closed/series side (xi = e^0.3): " + ratios);
      r.notes.push_back(std::string("predicted ratio beta^(1-k), times (-1)^(m+k+1) for m < k: ") +
                        (worst_vs_prediction < 1e-8 ? "observed ratios agree" : "observed ratios disagree") +
                        " (max relative deviation " + fmt6(worst_vs_prediction) + ")");
      break;
    }
  }
  r.finalize();
  return r;
}

// --- Legendre normalisation and overlaps -------------------------------------------

VerificationReport check_legendre_self_norm(int m_max, const std::vector<cplx>& args, double tolerance) {
  auto r = start("norm.legendre_series", tolerance);
  r.params["m_max"] = m_max;
  r.params["args"] = cplx_list(args);
  double worst_tail = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    for (cplx z : args) {
      const double rr = std::abs(z);
      const int n = states::legendre_truncation(m, rr);
      const auto s = states::legendre_cs(m, z, n);
      r.residuals.push_back(std::abs(s.norm_squared() - 1.0));
      if (rr > 0.0) {
        const double full = states::legendre_norm_series(m, rr, 2 * n);
        worst_tail = std::max(worst_tail, std::abs(states::legendre_norm_series(m, rr, n) / full - 1.0));
      }
    }
  }
  r.grid_summary = "m = 0.." + std::to_string(m_max) + " by " + std::to_string(args.size()) + " arguments";
  r.notes.push_back("truncated-series tail M(N)/M(2N) - 1 at most " + fmt6(worst_tail));
  r.finalize();
  return r;
}

VerificationReport check_legendre_norm_form(LegendreForm form, const std::vector<int>& ms,
                                            const std::vector<double>& radii, double tolerance) {
  auto r = start(form == LegendreForm::Printed ? "norm.legendre_printed" : "norm.legendre_closed", tolerance);
  r.gated = form == LegendreForm::Closed;
  json jm = json::array();
  for (int m : ms) jm.push_back(m);
  json jr = json::array();
  for (double x : radii) jr.push_back(x);
  r.params["m"] = jm;
  r.params["r"] = jr;
  for (int m : ms) {
    std::string line = "m=" + std::to_string(m) + " ratio form/series:";
    for (double rr : radii) {
      const double series = states::legendre_norm_series(m, rr, states::legendre_truncation(m, rr));
      const double f = form == LegendreForm::Printed ? states::legendre_norm_printed(m, rr)
                                                     : states::legendre_norm_closed(m, rr);
      const double ratio = (series == 0.0 && f == 0.0) ? 1.0 : f / series;
      r.residuals.push_back(std::abs(ratio - 1.0));
      line += " r=" + fmt6(rr) + ": " + fmt6(ratio);
    }
    if (form == LegendreForm::Printed && m > 0) {
      line += " (r -> 0 limit (3m)!/(2m)! = " +
              fmt6(std::exp(specfun::log_factorial(3 * m) - specfun::log_factorial(2 * m))) + ")";
    }
    r.notes.push_back(line);
  }
  if (form == LegendreForm::Printed) {
    r.notes.push_back("the series matches (2m)!/(2m+1) r^{2m} 2F1(2m+1, m+1/2; m+3/2; r^2); see norm.legendre_closed");
  }
  r.grid_summary = std::to_string(ms.size()) + " m by " + std::to_string(radii.size()) + " radii";
  r.finalize();
  return r;
}

VerificationReport check_overlap(int m, const std::vector<std::pair<cplx, cplx>>& pairs, double tolerance,
                                 LegendreForm form) {
  const bool printed = form == LegendreForm::Printed;
  auto r = start(printed ? "overlap.legendre_printed" : "overlap.legendre_closed", tolerance);
  r.gated = !printed || m == 0;
  r.params["m"] = m;
  json jp = json::array();
  for (const auto& [a, b] : pairs) jp.push_back({fmt(a), fmt(b)});
  r.params["pairs"] = jp;
  std::string line;
  for (const auto& [zl, zr] : pairs) {
    const int n = std::max(states::legendre_truncation(m, std::abs(zl)), states::legendre_truncation(m, std::abs(zr)));
    const cplx ip = fock::inner_product(states::legendre_cs(m, zl, n), states::legendre_cs(m, zr, n));
    const cplx kernel = printed ? states::legendre_overlap_printed(m, zl, zr, n)
                                : states::legendre_overlap_closed(m, zl, zr, n);
    r.residuals.push_back(std::abs(kernel - ip));
    if (std::abs(ip) > 0.0) line += (line.empty() ? "" : ", ") + fmt6(std::abs(kernel / ip));
  }
  r.notes.push_back("|kernel / series inner product| per pair: " + line);
  r.grid_summary = std::to_string(pairs.size()) + " pairs";
  r.finalize();
  return r;
}

VerificationReport check_legendre_measure_lines(const std::vector<int>& ms, const std::vector<double>& radii,
                                                double tolerance) {
  auto r = start("measure.legendre_lines", tolerance);
  r.gated = false;
  for (int m : ms) {
    std::string line = "m=" + std::to_string(m) + " line2/line1:";
    for (double rr : radii) {
      const double a = states::legendre_measure_printed(m, rr, states::MeasureLine::First);
      const double b = states::legendre_measure_printed(m, rr, states::MeasureLine::Second);
      r.residuals.push_back(std::abs(b / a - 1.0));
      line += " r=" + fmt6(rr) + ": " + fmt6(b / a);
    }
    r.notes.push_back(line);
  }
  r.notes.push_back("line2/line1 equals (printed M)/(series M): the lines agree when M is the printed 2F1 form");
  r.grid_summary = std::to_string(ms.size()) + " m by " + std::to_string(radii.size()) + " radii";
  r.finalize();
  return r;
}

// --- moments ---------------------------------------------------------------------

VerificationReport check_moment_resolution(MomentFamily family, int sphere_m, int lo, int hi, double tolerance,
                                           double quad_tol) {
  if (lo > hi) throw DomainError("check_moment_resolution: empty index range");
  static const char* names[] = {"moment.sho",         "moment.flatband_even",   "moment.flatband_odd_printed",
                                "moment.flatband_odd_corrected", "moment.legendre_line1", "moment.legendre_line2"};
  auto r = start(names[static_cast<int>(family)], tolerance);
  const bool sphere = family == MomentFamily::SphereFirstLine || family == MomentFamily::SphereSecondLine;
  r.gated = family == MomentFamily::SHO || family == MomentFamily::FlatBandEven;
  if (sphere) {
    if (sphere_m < 1) throw DomainError("check_moment_resolution: sphere measure needs m >= 1");
    if (lo < sphere_m) throw DomainError("check_moment_resolution: sphere index l >= m");
    r.params["m"] = sphere_m;
  }
  r.params["index_range"] = {lo, hi};
  r.params["quadrature_target"] = quad_tol;

  double worst_quad = 0.0;
  std::string ratios;
  std::vector<std::string> failures;
  std::vector<int> divergent;
  for (int i = lo; i <= hi; ++i) {
    std::function<double(double)> f;
    Support support = Support::HalfLine;
    double required = 1.0;
    switch (family) {
      case MomentFamily::SHO:
        f = [i](double rr) { return 2.0 * kPi * std::pow(rr, 2 * i + 1) * std::exp(-rr * rr) / kPi; };
        required = std::exp(specfun::log_factorial(i));
        break;
      case MomentFamily::FlatBandEven:
        f = [i](double rr) {
          const double w = rr > 0.0 ? (rr < 700.0 ? rr / std::sinh(rr) : 0.0) : 1.0;
          return 2.0 * kPi * std::pow(rr, 2 * i + 1) * w * states::bessel_measure(Family::FlatBandEven, rr);
        };
        required = std::exp(specfun::log_factorial(2 * i + 1));
        break;
      case MomentFamily::FlatBandOddPrinted:
      case MomentFamily::FlatBandOddCorrected: {
        const auto reading = family == MomentFamily::FlatBandOddPrinted ? states::MeasureReading::Printed
                                                                        : states::MeasureReading::Corrected;
        f = [i, reading](double rr) {
          if (rr == 0.0) return 0.0;
          const double w = rr < 700.0 ? 1.0 / std::cosh(rr) : 0.0;
          return 2.0 * kPi * std::pow(rr, 2 * i + 1) * w * states::bessel_measure(Family::FlatBandOdd, rr, reading);
        };
        required = std::exp(specfun::log_factorial(2 * i));
        break;
      }
      case MomentFamily::SphereFirstLine:
      case MomentFamily::SphereSecondLine: {
        const auto line = family == MomentFamily::SphereFirstLine ? states::MeasureLine::First
                                                                  : states::MeasureLine::Second;
        const int m = sphere_m;
        const double weight = std::exp(specfun::log_factorial_ratio(i + m, i - m)) / (2.0 * i + 1.0);
        f = [i, m, line, weight](double rr) {
          if (rr <= 0.0 || rr >= 1.0) return 0.0;
          return 2.0 * kPi * std::pow(rr, 2 * i + 1) * states::legendre_measure_over_norm(m, rr, line) * weight;
        };
        support = Support::UnitInterval;
        break;
      }
    }
    try {
      const auto q = integrate_radial(f, support, quad_tol);
      const double ratio = q.value / required;
      r.residuals.push_back(std::abs(ratio - 1.0));
      worst_quad = std::max(worst_quad, q.error_estimate / std::max(std::abs(q.value), 1e-300));
      ratios += (ratios.empty() ? "" : ", ") + std::to_string(i) + ": " + fmt6(ratio);
    } catch (const ConvergenceError& e) {
      r.residuals.push_back(kInf);
      std::string verdict = "not resolved";
      if (sphere) {
        const auto near0 = probe_endpoint(f, 0.0, 1.0, false);
        const auto near1 = probe_endpoint(f, 0.0, 1.0, true);
        auto partials = [](const EndpointProbe& p) {
          std::string s;
          for (std::size_t j = 0; j < p.partials.size(); ++j) s += (j ? " " : "") + fmt6(p.partials[j]);
          return s;
        };
        if (near0.divergent || near1.divergent) {
          divergent.push_back(i);
          verdict = std::string("divergent at r -> ") + (near0.divergent && near1.divergent ? "0 and r -> 1"
                                                         : near0.divergent                  ? "0"
                                                                                            : "1");
        }
        verdict += " (partial integrals, cut-off 1e-2..1e-7: near 0 [" + partials(near0) + "], near 1 [" +
                   partials(near1) + "])";
      }
      failures.push_back("index " + std::to_string(i) + ": quadrature did not converge (best estimate " +
                         fmt6(e.best_estimate() / required) + " of required, error " + fmt6(e.error_estimate()) +
                         "); " + verdict);
      ratios += (ratios.empty() ? "" : ", ") + std::to_string(i) + ": n/a";
    }
  }
  r.params["max_quadrature_rel_error"] = json_number(worst_quad);
  if (sphere) r.params["divergent_indices"] = divergent;
  r.notes.push_back("moment / required per index: " + ratios);
  for (auto& s : failures) r.notes.push_back(std::move(s));
  if (family == MomentFamily::FlatBandOddPrinted) {
    r.notes.push_back("printed density gives (2m+1)!, i.e. 2m+1 times the required (2m)!; moment.flatband_odd_corrected "
                      "adds the missing 1/r");
  }
  r.grid_summary = "indices " + std::to_string(lo) + ".." + std::to_string(hi) +
                   (sphere ? " on [0,1)" : " on [0,inf)");
  r.finalize();
  return r;
}

// --- orthogonality ---------------------------------------------------------------

VerificationReport check_orthogonality(OrthoModel model, const OrthoParams& p, int index_max, double tolerance) {
  if (index_max < 0) throw DomainError("check_orthogonality: index_max >= 0");
  static const char* names[] = {"ortho.laguerre", "ortho.sphere", "ortho.landau", "ortho.flatband_even",
                                "ortho.flatband_odd"};
  auto r = start(names[static_cast<int>(model)], tolerance);
  r.params["index_max"] = index_max;
  constexpr double kQuadTol = 1e-12;
  double worst_quad = 0.0;
  auto integrate = [&](const std::function<double(double)>& f) {
    const auto q = integrate_radial(f, Support::HalfLine, kQuadTol);
    worst_quad = std::max(worst_quad, q.error_estimate);
    return q.value;
  };

  switch (model) {
    case OrthoModel::CalogeroSutherland: {
      r.params["lambda"] = p.lambda;
      fock::FamilyParams fp;
      fp.lambda = p.lambda;
      for (int n = 0; n <= index_max; ++n) {
        for (int m = n; m <= index_max; ++m) {
          // x = u^2 smooths the x^{2 lambda} endpoint behaviour
          const double g = integrate([&](double u) {
            const QuantumLabel a{Family::CalogeroSutherland, n, 0}, b{Family::CalogeroSutherland, m, 0};
            const states::LinePoint x{u * u};
            return 2.0 * u * std::real(states::basis_wavefunction(a, fp, x)) *
                   std::real(states::basis_wavefunction(b, fp, x));
          });
          r.residuals.push_back(std::abs(g - (n == m ? 1.0 : 0.0)));
        }
      }
      r.grid_summary = "n, m <= " + std::to_string(index_max) + ", adaptive Gauss-Kronrod on [0,inf) in u = sqrt(x)";
      break;
    }
    case OrthoModel::Sphere: {
      const int nt = std::max(16, index_max + 8);
      const int np = 2 * index_max + 8;
      const auto rule = gauss_legendre(nt);
      std::vector<QuantumLabel> labels;
      for (int l = 0; l <= index_max; ++l) {
        for (int m = -l; m <= l; ++m) labels.push_back({Family::Sphere, l, m});
      }
      std::vector<std::vector<cplx>> values(labels.size());
      std::vector<double> weights;
      for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < np; ++j) {
          weights.push_back(rule.weights[static_cast<std::size_t>(i)] * 2.0 * kPi / np);
        }
      }
      for (std::size_t a = 0; a < labels.size(); ++a) {
        for (int i = 0; i < nt; ++i) {
          const double theta = std::acos(rule.nodes[static_cast<std::size_t>(i)]);
          for (int j = 0; j < np; ++j) {
            values[a].push_back(specfun::spherical_harmonic(labels[a].first, labels[a].second, theta,
                                                            2.0 * kPi * j / np));
          }
        }
      }
      for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a; b < labels.size(); ++b) {
          cplx g = 0.0;
          for (std::size_t q = 0; q < weights.size(); ++q) g += weights[q] * std::conj(values[a][q]) * values[b][q];
          r.residuals.push_back(std::abs(g - (a == b ? 1.0 : 0.0)));
        }
      }
      r.grid_summary = std::to_string(labels.size()) + " harmonics l <= " + std::to_string(index_max) + ", " +
                       std::to_string(nt) + "-point Gauss-Legendre in cos(theta) by " + std::to_string(np) +
                       "-point trapezoid in phi";
      break;
    }
    case OrthoModel::Landau: {
      r.params["landau_scale"] = p.landau_scale;
      std::vector<QuantumLabel> labels;
      for (int n = 0; n <= index_max; ++n) {
        for (int m = -n; n + m <= index_max; ++m) labels.push_back({Family::Landau, n, m});
      }
      fock::FamilyParams fp;
      fp.landau_scale = p.landau_scale;
      const int np = 4 * index_max + 8;
      auto angular = [np](int dm) {
        cplx s = 0.0;
        for (int j = 0; j < np; ++j) s += std::polar(1.0, dm * 2.0 * kPi * j / np);
        return s * (2.0 * kPi / np);
      };
      for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a; b < labels.size(); ++b) {
          const auto la = labels[a], lb = labels[b];
          const double radial = integrate([&](double rr) {
            const double ra = std::real(states::basis_wavefunction(la, fp, states::PolarPoint{rr, 0.0}));
            const double rb = std::real(states::basis_wavefunction(lb, fp, states::PolarPoint{rr, 0.0}));
            return ra * rb * rr;
          });
          const cplx g = angular(lb.second - la.second) * radial;
          r.residuals.push_back(std::abs(g - (a == b ? 1.0 : 0.0)));
        }
      }
      r.grid_summary = std::to_string(labels.size()) + " labels n, n+m <= " + std::to_string(index_max) +
                       ", Gauss-Kronrod in r by " + std::to_string(np) + "-point trapezoid in phi";
      break;
    }
    case OrthoModel::FlatBandEven:
    case OrthoModel::FlatBandOdd: {
      const bool even = model == OrthoModel::FlatBandEven;
      const auto parity = even ? genfun::Parity::Even : genfun::Parity::Odd;
      const auto norm = p.bessel_printed_norm ? genfun::BesselNormalization::Printed
                                              : genfun::BesselNormalization::Corrected;
      if (p.bessel_printed_norm) r.check_id += "_printed_a";
      r.gated = !p.bessel_printed_norm;
      r.params["k"] = p.k;
      r.params["beta"] = p.beta;
      r.params["normalization"] = p.bessel_printed_norm ? "printed" : "corrected";
      const double beta = p.beta;
      std::string diag;
      for (int m = 0; m <= index_max; ++m) {
        // y-integral over (-pi, pi) gives 2 pi delta; with u = e^{-x}:
        // beta^2 int_0^inf B(1/u)^2 e^{-beta u} du / u
        const double g = integrate([&](double u) {
          const double w = std::exp(-beta * u);
          if (w == 0.0 || u < 1e-150) return 0.0;
          const auto b = genfun::assoc_bessel(p.k, parity, m, beta, 1.0 / u, norm);
          return beta * beta * b * b * w / u;
        });
        r.residuals.push_back(std::abs(g - 1.0));
        diag += (m ? ", " : "") + fmt6(g);
        for (int m2 = m + 1; m2 <= index_max; ++m2) r.residuals.push_back(0.0);
      }
      r.notes.push_back("diagonal entries: " + diag);
      r.notes.push_back("off-diagonal entries vanish through the y-integral (distinct second labels)");
      r.grid_summary = "members 0.." + std::to_string(index_max) + " of sequence k=" + std::to_string(p.k) +
                       ", Gauss-Kronrod in u = e^{-x}";
      break;
    }
  }
  r.params["max_quadrature_abs_error"] = json_number(worst_quad);
  r.finalize();
  return r;
}

// --- spectrum --------------------------------------------------------------------

VerificationReport check_spectrum_values(int range, double tolerance) {
  auto r = start("spectrum.values", tolerance);
  r.params["range"] = range;
  for (int l = -range; l <= range; ++l) {
    for (int m = -range; m <= range; ++m) {
      const double direct = (m - l - 0.5) * (m + l + 0.5);
      const double four_e = 4.0 * spectrum(l, m);
      const double exact = static_cast<double>(spectrum_quarters(l, m));
      r.residuals.push_back(std::max(std::abs(spectrum(l, m) - direct), std::abs(four_e - exact)));
    }
  }
  r.notes.push_back("l=0,m=1: " + fmt(spectrum(0, 1)) + "; l=0,m=0: " + fmt(spectrum(0, 0)));
  r.grid_summary = "|l|, |m| <= " + std::to_string(range) + ", exact quarter-integer comparison";
  r.finalize();
  return r;
}

VerificationReport check_degeneracy(int l_lo, int l_hi, int m_lo, int m_hi) {
  auto r = start("spectrum.degeneracy", 0.5);
  r.gated = false;
  const auto scan = degeneracy_scan(l_lo, l_hi, m_lo, m_hi);
  r.params["l"] = {l_lo, l_hi};
  r.params["m"] = {m_lo, m_hi};
  r.residuals.push_back(static_cast<double>(scan.counterexamples.size()));
  std::string hist;
  for (const auto& [mult, count] : scan.multiplicity_histogram) {
    hist += (hist.empty() ? "" : ", ") + std::to_string(count) + " levels x" + std::to_string(mult);
  }
  r.notes.push_back("multiplicity table: " + hist);
  r.notes.push_back(scan.verdict());
  r.grid_summary = std::to_string((l_hi - l_lo + 1) * (m_hi - m_lo + 1)) + " (l, m) pairs";
  r.finalize();
  return r;
}

}  // namespace gfcs::verify
