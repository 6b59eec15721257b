#pragma once

// Coherent-state families, their normalisations, overlap kernels, resolution-of-identity
// densities and position-space evaluation.

#include <complex>
#include <variant>

#include "gfcs/fock.hpp"

namespace gfcs::states {

using cplx = std::complex<double>;
using fock::CoefficientSeries;

/// Dimensionless groups of the models. All default to 1.
struct ModelConstants {
  double landau_scale = 1.0;        // M omega / (2 hbar)
  double beta = 1.0;                // -e B0 a0^2 / (2 pi^2 hbar c)
  double spectrum_prefactor = 1.0;  // 2 pi^2 hbar^2 / (mu a0^2)

  void validate() const;
};

/// ceil(|a|^2 + 12 (|a| + 1)) for families whose coefficient series is entire.
int default_truncation_entire(double abs_arg);
/// ceil(30 / (1 - |a|)) capped at 2000 for unit-disc families.
int default_truncation_disc(double abs_arg);

// --- Canonical (Schrodinger) states ----------------------------------------------

/// e^{-|z|^2/2} z^n / sqrt(n!), n = 0..N.
CoefficientSeries canonical_cs(cplx z, int truncation);

// --- Spherical-harmonic states ---------------------------------------------------

/// Smallest N (at least default_truncation_disc(r)) after which the M_m series terms stay
/// below 1e-17 of the partial sum; the weights grow like l^{2m}, so the generic disc rule
/// under-truncates for m >= 1 close to the rim. Capped at 20000.
int legendre_truncation(int m, double r);

/// Labels (l, m), l = m..m+N; coefficients z^l sqrt((l+m)!/((l-m)!(2l+1))) / sqrt(M_m(|z|)).
CoefficientSeries legendre_cs(int m, cplx z, int truncation);

/// sum_{l=m}^{m+N} r^{2l} (l+m)!/((l-m)!(2l+1)). Reference normalisation.
double legendre_norm_series(int m, double r, int truncation);

/// (3m)!/(2m+1) r^{2m} 2F1(3m+1, m+1/2; m+3/2; r^2), as printed.
double legendre_norm_printed(int m, double r);

/// (2m)!/(2m+1) r^{2m} 2F1(2m+1, m+1/2; m+3/2; r^2), the closed form the series sums to.
double legendre_norm_closed(int m, double r);

/// Printed overlap kernel with both normalisations taken from legendre_norm_series.
cplx legendre_overlap_printed(int m, cplx z_left, cplx z_right, int truncation);

/// Same kernel with the (2m)!, 2m+1 parameters of legendre_norm_closed.
cplx legendre_overlap_closed(int m, cplx z_left, cplx z_right, int truncation);

enum class MeasureLine { First, Second };

/// Resolution-of-identity density on the unit disc, either printed line. The first
/// line multiplies legendre_norm_series, the second is self-contained. Requires m >= 1.
double legendre_measure_printed(int m, double r, MeasureLine line = MeasureLine::Second);

/// Density divided by the state normalisation M_m(r): the quantity that enters the
/// diagonal moments. First line: (1+r^-2)(1-r^-2)^{2m-2}/(pi (2m-2)!) exactly.
double legendre_measure_over_norm(int m, double r, MeasureLine line);

// --- Calogero-Sutherland states --------------------------------------------------

/// Barut-Girardello: (-z)^n / sqrt(n! Gamma(n+lambda+1/2)), normalised by the truncated norm.
CoefficientSeries cs_bg(double lambda, cplx z, int truncation);

/// Klauder-Perelomov: (-z)^n sqrt(Gamma(n+lambda+1/2)/n!), |z| < 1.
CoefficientSeries cs_kp(double lambda, cplx z, int truncation);

// --- Landau states ---------------------------------------------------------------

/// Chain |n+m, -n>, n = -m..N, of the Landau-level generating function. Coefficients
/// w^{n+m} sqrt(m!/(m+n)!), i.e. the printed w^n sqrt(m!/(m+n)!) times the common
/// factor w^m, which keeps w = 0 regular. Eigenvector of a with eigenvalue w.
CoefficientSeries landau_cs(int m, cplx w, int truncation, double landau_scale = 1.0);

// --- Flat-band states ------------------------------------------------------------

/// even: sqrt(|z|/sinh|z|) z^m / sqrt((2m+1)!) on |m-k, -m-k-1>
/// odd:  z^m / (sqrt(cosh|z|) sqrt((2m)!))      on |m-k-1, -m-k-1>
CoefficientSeries bessel_cs(fock::Family parity, int k, cplx z, int truncation, double beta = 1.0);

enum class MeasureReading { Printed, Corrected };

/// even: e^{-r} sinh(r) / (2 pi r) (the printed e^{-z} read as e^{-|z|});
/// odd:  e^{-r} cosh(r) / (2 pi) as printed, or with the extra 1/r when Corrected.
double bessel_measure(fock::Family parity, double r, MeasureReading reading = MeasureReading::Printed);

// --- Position space --------------------------------------------------------------

struct LinePoint { double x; };               // SHO, Calogero-Sutherland (x > 0)
struct SpherePoint { double theta, phi; };    // 0 <= theta <= pi
struct PolarPoint { double r, phi; };         // Landau, r > 0
struct BandPoint { double x, y; };            // flat band with a0 = 2 pi, xi = e^x

using Point = std::variant<LinePoint, SpherePoint, PolarPoint, BandPoint>;

/// <point | label>
cplx basis_wavefunction(const fock::QuantumLabel& label, const fock::FamilyParams& params,
                        const Point& point);

/// sum_label c <point | label>
cplx cs_wavefunction(const CoefficientSeries& s, const Point& point);

}  // namespace gfcs::states
