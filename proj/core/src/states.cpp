#include "gfcs/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gfcs/errors.hpp"
#include "gfcs/genfun.hpp"
#include "gfcs/specfun.hpp"

namespace gfcs::states {

namespace {

using fock::Family;
using fock::FamilyParams;
using fock::QuantumLabel;
using fock::Term;
using specfun::log_factorial;

constexpr double kPi = std::numbers::pi;

void require_truncation(int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": truncation must be >= 1");
}

void require_finite(cplx z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(who) + ": non-finite argument");
  }
}

// z^n with 0^0 = 1
cplx ipow(cplx z, int n) {
  if (n == 0) return 1.0;
  if (z == cplx(0.0)) return 0.0;
  return std::pow(z, n);
}

// 2F1 for real 0 <= x < 1; Euler's transformation once x passes 1/2 so that parameter
// sets with a + b > c stay cheap close to the branch point.
double hyp2f1_real(double a, double b, double c, double x) {
  if (x <= 0.5) return specfun::gauss_2f1(a, b, c, x);
  return std::pow(1.0 - x, c - a - b) * specfun::gauss_2f1(c - a, c - b, c, x);
}

double legendre_log_weight(int l, int m) {
  // log((l+m)!/((l-m)!(2l+1)))
  return specfun::log_factorial_ratio(l + m, l - m) - std::log(2.0 * l + 1.0);
}

// sum_{j=0}^{N} r^{2j} (j+2m)!/(j!(2j+2m+1)), i.e. M_m(r) / r^{2m}
double legendre_norm_reduced(int m, double r, int truncation) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(truncation) + 1);
  const double lr = r > 0.0 ? 2.0 * std::log(r) : 0.0;
  for (int j = 0; j <= truncation; ++j) {
    if (r == 0.0 && j > 0) break;
    terms.push_back(std::exp(j * lr + legendre_log_weight(j + m, m)));
  }
  return specfun::compensated_sum(terms);
}

void require_disc(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError(std::string(who) + ": requires 0 <= r < 1");
}

double log_gamma(double x) { return std::lgamma(x); }

// <x | n, lambda> for n = 0..nmax
std::vector<double> cs_basis_sequence(int nmax, double lambda, double x) {
  if (!(x >= 0.0)) throw DomainError("Calogero-Sutherland basis: requires x >= 0");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  if (x == 0.0 && lambda < 0.0) throw DomainError("Calogero-Sutherland basis: singular at x = 0");
  if (x == 0.0 && lambda > 0.0) return out;
  // far tail: Gaussian beats the polynomial, but x^2 alone can overflow
  if (x > 1e100 || lambda * std::log(x) - 0.5 * x * x + nmax * std::log1p(x * x) < -745.0) return out;
  const auto lag = specfun::assoc_laguerre_sequence(nmax, lambda - 0.5, x * x);
  const double common = lambda * std::log(x) - 0.5 * x * x;
  for (int n = 0; n <= nmax; ++n) {
    const double lognorm = 0.5 * (std::log(2.0) + log_factorial(n) - log_gamma(n + lambda + 0.5));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    out[static_cast<std::size_t>(n)] =
        sign * std::exp(lognorm + (x == 0.0 ? 0.0 : common)) * lag[static_cast<std::size_t>(n)];
  }
  return out;
}

// normalised Hermite functions phi_0..phi_nmax
std::vector<double> sho_basis_sequence(int nmax, double x) {
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  out[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (nmax >= 1) out[1] = std::sqrt(2.0) * x * out[0];
  for (int n = 2; n <= nmax; ++n) {
    out[static_cast<std::size_t>(n)] =
        std::sqrt(2.0 / n) * x * out[static_cast<std::size_t>(n - 1)] -
        std::sqrt((n - 1.0) / n) * out[static_cast<std::size_t>(n - 2)];
  }
  return out;
}

// radial part of <r, phi | N, M>; phase e^{i M phi} applied by the caller
double landau_radial(int n, int m, double r, double c) {
  if (!(r >= 0.0)) throw DomainError("Landau basis: requires r >= 0");
  const double u = c * r * r;
  const double sr = std::sqrt(c) * r;
  const double pre = std::sqrt(c / kPi) * std::exp(-0.5 * u);
  if (m >= 0) {
    // sqrt(N!/(N+M)!) (sqrt(c) r)^M L^M_N(u)
    const double scale = std::exp(-0.5 * specfun::log_factorial_ratio(n + m, n));
    const double power = m == 0 ? 1.0 : std::pow(sr, m);
    return pre * scale * power * specfun::assoc_laguerre(n, m, u);
  }
  // negative M = -j: L^{-j}_N(u) = (-u)^j (N-j)!/N! L^j_{N-j}(u)
  const int j = -m;
  const double scale = std::exp(-0.5 * specfun::log_factorial_ratio(n, n - j));
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return pre * sign * scale * std::pow(sr, j) * specfun::assoc_laguerre(n - j, j, u);
}

struct BesselIndex {
  genfun::Parity parity;
  int k;
  int member;  // position m in the sequence
};

BesselIndex bessel_index(const QuantumLabel& label) {
  const int s = label.first + label.second;
  BesselIndex idx{};
  if (label.family == Family::FlatBandEven) {
    // (m-k, -m-k-1): l + m' = -2k-1
    if ((s + 1) % 2 != 0 || s > -1) throw DomainError("flat-band even: label not in any sequence");
    idx.parity = genfun::Parity::Even;
    idx.k = -(s + 1) / 2;
    idx.member = label.first + idx.k;
  } else {
    // (m-k-1, -m-k-1): l + m' = -2k-2
    if (s % 2 != 0 || s > -2) throw DomainError("flat-band odd: label not in any sequence");
    idx.parity = genfun::Parity::Odd;
    idx.k = -(s + 2) / 2;
    idx.member = label.first + idx.k + 1;
  }
  if (idx.member < 0) throw DomainError("flat-band: label not in any sequence");
  return idx;
}

genfun::BesselNormalization bessel_norm_of(const FamilyParams& p) {
  return p.bessel_printed_norm ? genfun::BesselNormalization::Printed
                               : genfun::BesselNormalization::Corrected;
}

template <typename P>
const P& expect_point(const Point& point, const char* who) {
  const P* p = std::get_if<P>(&point);
  if (p == nullptr) throw DomainError(std::string(who) + ": coordinate type does not match family");
  return *p;
}

}  // namespace

void ModelConstants::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("ModelConstants: beta must be > 0");
  if (!(landau_scale > 0.0) || !std::isfinite(landau_scale)) {
    throw DomainError("ModelConstants: landau scale must be > 0");
  }
  if (!std::isfinite(spectrum_prefactor)) throw DomainError("ModelConstants: non-finite prefactor");
}

int default_truncation_entire(double abs_arg) {
  if (!(abs_arg >= 0.0) || !std::isfinite(abs_arg)) throw DomainError("default_truncation_entire");
  return static_cast<int>(std::ceil(abs_arg * abs_arg + 12.0 * (abs_arg + 1.0)));
}

int default_truncation_disc(double abs_arg) {
  if (!(abs_arg >= 0.0 && abs_arg < 1.0)) throw DomainError("default_truncation_disc: requires |z| < 1");
  const double n = std::ceil(30.0 / (1.0 - abs_arg));
  return static_cast<int>(std::min(n, 2000.0));
}

// --- canonical -------------------------------------------------------------------

CoefficientSeries canonical_cs(cplx z, int truncation) {
  require_truncation(truncation, "canonical_cs");
  require_finite(z, "canonical_cs");
  std::vector<Term> terms;
  const double r = std::abs(z);
  const double norm = std::exp(-0.5 * r * r);
  cplx c = norm;
  for (int n = 0; n <= truncation; ++n) {
    if (n > 0) c *= z / std::sqrt(static_cast<double>(n));
    terms.push_back({{Family::SHO, n, 0}, c});
  }
  return CoefficientSeries(Family::SHO, std::move(terms), truncation, {}, norm);
}

// --- sphere ----------------------------------------------------------------------

double legendre_norm_series(int m, double r, int truncation) {
  if (m < 0) throw DomainError("legendre_norm_series: m >= 0");
  require_disc(r, "legendre_norm_series");
  if (truncation < 0) throw DomainError("legendre_norm_series: truncation >= 0");
  if (r == 0.0) return m == 0 ? 1.0 : 0.0;
  return std::pow(r, 2 * m) * legendre_norm_reduced(m, r, truncation);
}

double legendre_norm_printed(int m, double r) {
  if (m < 0) throw DomainError("legendre_norm_printed: m >= 0");
  require_disc(r, "legendre_norm_printed");
  const double x = r * r;
  return std::exp(log_factorial(3 * m)) / (2.0 * m + 1.0) * std::pow(r, 2 * m) *
         hyp2f1_real(3.0 * m + 1.0, m + 0.5, m + 1.5, x);
}

double legendre_norm_closed(int m, double r) {
  if (m < 0) throw DomainError("legendre_norm_closed: m >= 0");
  require_disc(r, "legendre_norm_closed");
  const double x = r * r;
  return std::exp(log_factorial(2 * m)) / (2.0 * m + 1.0) * std::pow(r, 2 * m) *
         hyp2f1_real(2.0 * m + 1.0, m + 0.5, m + 1.5, x);
}

int legendre_truncation(int m, double r) {
  if (m < 0) throw DomainError("legendre_truncation: m >= 0");
  require_disc(r, "legendre_truncation");
  const int base = default_truncation_disc(r);
  if (r == 0.0) return base;
  const double lr = 2.0 * std::log(r);
  double sum = 0.0;
  double prev = 0.0;
  for (int j = 0; j <= 20000; ++j) {
    const double term = std::exp(j * lr + legendre_log_weight(j + m, m));
    sum += term;
    if (j >= base && term < prev && term < 1e-17 * sum) return j;
    prev = term;
  }
  return 20000;
}

CoefficientSeries legendre_cs(int m, cplx z, int truncation) {
  if (m < 0) throw DomainError("legendre_cs: m >= 0");
  require_truncation(truncation, "legendre_cs");
  require_finite(z, "legendre_cs");
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("legendre_cs: requires |z| < 1");
  // z^{l-m} weights over sqrt(M_m / r^{2m}) gives the normalised state, regular at z = 0
  const double reduced = legendre_norm_reduced(m, r, truncation);
  const double inv = 1.0 / std::sqrt(reduced);
  const cplx phase = (m > 0 && r > 0.0) ? std::pow(z / r, m) : cplx(1.0);
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(truncation) + 1);
  for (int l = m; l <= m + truncation; ++l) {
    const cplx c = phase * ipow(z, l - m) * std::exp(0.5 * legendre_log_weight(l, m)) * inv;
    terms.push_back({{Family::Sphere, l, m}, c});
  }
  const double normalization =
      r > 0.0 ? inv * std::pow(r, -m) : std::numeric_limits<double>::infinity();
  FamilyParams p;
  p.m = m;
  return CoefficientSeries(Family::Sphere, std::move(terms), truncation, p,
                           m == 0 ? inv : normalization);
}

namespace {

cplx legendre_overlap_impl(int m, cplx zl, cplx zr, int truncation, int fact_n, double a) {
  if (m < 0) throw DomainError("legendre_overlap: m >= 0");
  require_finite(zl, "legendre_overlap");
  require_finite(zr, "legendre_overlap");
  if (!(std::abs(zl) < 1.0 && std::abs(zr) < 1.0)) throw DomainError("legendre_overlap: |z| < 1");
  const cplx x = std::conj(zl) * zr;
  // (x)^m / sqrt(M(|zl|) M(|zr|)) with the r^{2m} factors of M cancelled by hand
  const double rl = std::abs(zl), rr = std::abs(zr);
  const double ml = legendre_norm_reduced(m, rl, truncation);
  const double mr = legendre_norm_reduced(m, rr, truncation);
  cplx phase = 1.0;
  if (m > 0) {
    if (rl == 0.0 || rr == 0.0) return (rl == 0.0 && rr == 0.0) ? 1.0 : 0.0;
    phase = std::pow(x / (rl * rr), m);
  }
  return std::exp(log_factorial(fact_n)) / (2.0 * m + 1.0) * phase *
         specfun::gauss_2f1(a, m + 0.5, m + 1.5, x) / std::sqrt(ml * mr);
}

}  // namespace

cplx legendre_overlap_printed(int m, cplx z_left, cplx z_right, int truncation) {
  return legendre_overlap_impl(m, z_left, z_right, truncation, 3 * m, 3.0 * m + 1.0);
}

cplx legendre_overlap_closed(int m, cplx z_left, cplx z_right, int truncation) {
  return legendre_overlap_impl(m, z_left, z_right, truncation, 2 * m, 2.0 * m + 1.0);
}

double legendre_measure_printed(int m, double r, MeasureLine line) {
  if (m < 1) throw DomainError("legendre_measure_printed: requires m >= 1");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("legendre_measure_printed: requires 0 < r < 1");
  const double f = std::exp(log_factorial(2 * m - 2));
  const double r2 = r * r;
  if (line == MeasureLine::First) {
    const double mm = legendre_norm_series(m, r, default_truncation_disc(r));
    return mm / (kPi * f) * (1.0 + 1.0 / r2) * std::pow(1.0 - 1.0 / r2, 2 * m - 2);
  }
  const double fp = hyp2f1_real(3.0 * m + 1.0, m + 0.5, m + 1.5, r2);
  return std::exp(log_factorial(3 * m)) / (kPi * (2.0 * m + 1.0) * f) * (1.0 + r2) *
         std::pow(1.0 - r2, 2 * m) * fp / (std::pow(1.0 - r2, 2) * std::pow(r, 2 * m - 2));
}

double legendre_measure_over_norm(int m, double r, MeasureLine line) {
  if (m < 1) throw DomainError("legendre_measure_over_norm: requires m >= 1");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("legendre_measure_over_norm: requires 0 < r < 1");
  const double r2 = r * r;
  const double f = std::exp(log_factorial(2 * m - 2));
  if (line == MeasureLine::First) {
    return (1.0 + 1.0 / r2) * std::pow(1.0 - 1.0 / r2, 2 * m - 2) / (kPi * f);
  }
  // second line over the closed-form M (the truncated series cannot follow r -> 1)
  return legendre_measure_printed(m, r, MeasureLine::Second) / legendre_norm_closed(m, r);
}

// --- Calogero-Sutherland ---------------------------------------------------------

namespace {

CoefficientSeries su11_state(double lambda, cplx z, int truncation, bool kp) {
  if (!(lambda > -0.5)) throw DomainError("cs state: requires lambda > -1/2");
  require_truncation(truncation, kp ? "cs_kp" : "cs_bg");
  require_finite(z, kp ? "cs_kp" : "cs_bg");
  if (kp && !(std::abs(z) < 1.0)) throw DomainError("cs_kp: requires |z| < 1");
  const double r = std::abs(z);
  std::vector<double> logmag(static_cast<std::size_t>(truncation) + 1);
  double peak = -std::numeric_limits<double>::infinity();
  for (int n = 0; n <= truncation; ++n) {
    const double lg = log_gamma(n + lambda + 0.5);
    const double base = kp ? 0.5 * (lg - log_factorial(n)) : -0.5 * (log_factorial(n) + lg);
    const double v = (r > 0.0 ? n * std::log(r) : (n == 0 ? 0.0 : -std::numeric_limits<double>::infinity())) + base;
    logmag[static_cast<std::size_t>(n)] = v;
    peak = std::max(peak, v);
  }
  std::vector<double> sq;
  for (double v : logmag) sq.push_back(std::exp(2.0 * (v - peak)));
  const double scaled_norm = std::sqrt(specfun::compensated_sum(sq));
  const cplx unit = r > 0.0 ? -z / r : cplx(-1.0);
  std::vector<Term> terms;
  for (int n = 0; n <= truncation; ++n) {
    const double mag = std::exp(logmag[static_cast<std::size_t>(n)] - peak) / scaled_norm;
    terms.push_back({{Family::CalogeroSutherland, n, 0}, mag * ipow(unit, n)});
  }
  FamilyParams p;
  p.lambda = lambda;
  const double normalization = std::exp(-peak) / scaled_norm;
  return CoefficientSeries(Family::CalogeroSutherland, std::move(terms), truncation, p, normalization);
}

}  // namespace

CoefficientSeries cs_bg(double lambda, cplx z, int truncation) {
  return su11_state(lambda, z, truncation, false);
}

CoefficientSeries cs_kp(double lambda, cplx z, int truncation) {
  return su11_state(lambda, z, truncation, true);
}

// --- Landau ----------------------------------------------------------------------

CoefficientSeries landau_cs(int m, cplx w, int truncation, double landau_scale) {
  if (m < 0) throw DomainError("landau_cs: m >= 0");
  require_truncation(truncation, "landau_cs");
  require_finite(w, "landau_cs");
  if (!(landau_scale > 0.0)) throw DomainError("landau_cs: landau scale must be > 0");
  // n = -m..N; j = n + m; coefficient w^j sqrt(m!/j!)
  std::vector<Term> terms;
  std::vector<double> sq;
  for (int j = 0; j <= truncation + m; ++j) {
    const cplx c = ipow(w, j) * std::exp(0.5 * (log_factorial(m) - log_factorial(j)));
    terms.push_back({{Family::Landau, j, m - j}, c});
    sq.push_back(std::norm(c));
  }
  const double inv = 1.0 / std::sqrt(specfun::compensated_sum(sq));
  for (auto& t : terms) t.coefficient *= inv;
  FamilyParams p;
  p.m = m;
  p.landau_scale = landau_scale;
  return CoefficientSeries(Family::Landau, std::move(terms), truncation, p, inv);
}

// --- flat band -------------------------------------------------------------------

CoefficientSeries bessel_cs(Family parity, int k, cplx z, int truncation, double beta) {
  if (parity != Family::FlatBandEven && parity != Family::FlatBandOdd) {
    throw DomainError("bessel_cs: parity must be FlatBandEven or FlatBandOdd");
  }
  if (k < 0) throw DomainError("bessel_cs: k >= 0");
  if (!(beta > 0.0)) throw DomainError("bessel_cs: beta > 0");
  require_truncation(truncation, "bessel_cs");
  require_finite(z, "bessel_cs");
  const bool even = parity == Family::FlatBandEven;
  const double r = std::abs(z);
  const double pre = even ? (r > 0.0 ? std::sqrt(r / std::sinh(r)) : 1.0) : 1.0 / std::sqrt(std::cosh(r));
  std::vector<Term> terms;
  for (int m = 0; m <= truncation; ++m) {
    const double lf = log_factorial(even ? 2 * m + 1 : 2 * m);
    const cplx c = pre * ipow(z, m) * std::exp(-0.5 * lf);
    const auto lab = genfun::bessel_label(k, even ? genfun::Parity::Even : genfun::Parity::Odd, m);
    terms.push_back({{parity, lab.first, lab.second}, c});
  }
  FamilyParams p;
  p.beta = beta;
  p.k = k;
  return CoefficientSeries(parity, std::move(terms), truncation, p, pre);
}

double bessel_measure(Family parity, double r, MeasureReading reading) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("bessel_measure: requires r >= 0");
  if (parity == Family::FlatBandEven) {
    if (r == 0.0) return 1.0 / (2.0 * kPi);
    // e^{-r} sinh r = (1 - e^{-2r}) / 2
    return -std::expm1(-2.0 * r) / (4.0 * kPi * r);
  }
  if (parity != Family::FlatBandOdd) throw DomainError("bessel_measure: flat-band family expected");
  const double v = (1.0 + std::exp(-2.0 * r)) / (4.0 * kPi);
  if (reading == MeasureReading::Printed) return v;
  if (r == 0.0) throw DomainError("bessel_measure: corrected odd density is singular at r = 0");
  return v / r;
}

// --- position space --------------------------------------------------------------

cplx basis_wavefunction(const QuantumLabel& label, const FamilyParams& params, const Point& point) {
  if (!fock::is_valid(label)) throw DomainError("basis_wavefunction: invalid label " + fock::to_string(label));
  switch (label.family) {
    case Family::SHO: {
      const auto& p = expect_point<LinePoint>(point, "SHO basis");
      return specfun::hermite_function(label.first, p.x);
    }
    case Family::CalogeroSutherland: {
      const auto& p = expect_point<LinePoint>(point, "Calogero-Sutherland basis");
      return cs_basis_sequence(label.first, params.lambda, p.x).back();
    }
    case Family::Sphere: {
      const auto& p = expect_point<SpherePoint>(point, "sphere basis");
      return specfun::spherical_harmonic(label.first, label.second, p.theta, p.phi);
    }
    case Family::Landau: {
      const auto& p = expect_point<PolarPoint>(point, "Landau basis");
      return landau_radial(label.first, label.second, p.r, params.landau_scale) *
             std::polar(1.0, label.second * p.phi);
    }
    case Family::FlatBandEven:
    case Family::FlatBandOdd: {
      const auto& p = expect_point<BandPoint>(point, "flat-band basis");
      const auto idx = bessel_index(label);
      const double b = genfun::assoc_bessel(idx.k, idx.parity, idx.member, params.beta, std::exp(p.x),
                                            bessel_norm_of(params));
      return params.beta / std::sqrt(2.0 * kPi) * std::polar(1.0, label.second * p.y) * b;
    }
  }
  throw DomainError("basis_wavefunction: unknown family");
}

cplx cs_wavefunction(const CoefficientSeries& s, const Point& point) {
  if (s.empty()) return 0.0;
  const auto& params = s.params();
  int top = 0;
  for (const auto& t : s.terms()) top = std::max(top, t.label.first);
  std::vector<cplx> terms;
  terms.reserve(s.size());
  switch (s.family()) {
    case Family::SHO: {
      const auto& p = expect_point<LinePoint>(point, "SHO wavefunction");
      const auto phi = sho_basis_sequence(top, p.x);
      for (const auto& t : s.terms()) terms.push_back(t.coefficient * phi[static_cast<std::size_t>(t.label.first)]);
      break;
    }
    case Family::CalogeroSutherland: {
      const auto& p = expect_point<LinePoint>(point, "Calogero-Sutherland wavefunction");
      const auto phi = cs_basis_sequence(top, params.lambda, p.x);
      for (const auto& t : s.terms()) terms.push_back(t.coefficient * phi[static_cast<std::size_t>(t.label.first)]);
      break;
    }
    case Family::FlatBandEven:
    case Family::FlatBandOdd: {
      const auto& p = expect_point<BandPoint>(point, "flat-band wavefunction");
      // one Taylor extraction serves every member when all labels share k
      const int kk = bessel_index(s.terms().front().label).k;
      const genfun::Parity parity = bessel_index(s.terms().front().label).parity;
      int mmax = 0;
      bool shared = true;
      for (const auto& t : s.terms()) {
        const auto idx = bessel_index(t.label);
        shared = shared && idx.k == kk;
        mmax = std::max(mmax, idx.member);
      }
      if (!shared) {
        for (const auto& t : s.terms()) terms.push_back(t.coefficient * basis_wavefunction(t.label, params, point));
        break;
      }
      const auto b = genfun::assoc_bessel_sequence(kk, parity, mmax, params.beta, std::exp(p.x),
                                                   bessel_norm_of(params));
      const double pre = params.beta / std::sqrt(2.0 * kPi);
      for (const auto& t : s.terms()) {
        const auto idx = bessel_index(t.label);
        terms.push_back(t.coefficient * pre * std::polar(1.0, t.label.second * p.y) *
                        b[static_cast<std::size_t>(idx.member)]);
      }
      break;
    }
    default:
      for (const auto& t : s.terms()) terms.push_back(t.coefficient * basis_wavefunction(t.label, params, point));
  }
  std::vector<double> re, im;
  for (const auto& v : terms) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return {specfun::compensated_sum(re), specfun::compensated_sum(im)};
}

}  // namespace gfcs::states
