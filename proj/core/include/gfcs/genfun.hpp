#pragma once

// Generating functions of the classical families used to build coherent states:
// closed forms, partial sums of their defining series, and Taylor-coefficient
// extraction by truncated power-series arithmetic.

#include <complex>
#include <string_view>
#include <utility>
#include <vector>

namespace gfcs::genfun {

enum class Family {
  Hermite,        // e^{2xt - t^2} = sum t^n H_n(x) / n!
  LegendreM,      // (2m)! (1-x^2)^{m/2} / (2^m m! (1+t^2-2xt)^{m+1/2}) = sum t^l P^m_{l+m}(x)
  LaguerrePlus,   // (xz)^{-m/2} J_m(2 sqrt(xz)) e^z = sum z^n L^m_n(x) / (n+m)!
  LaguerreMinus,  // e^{-xz/(1-z)} / (1-z)^{m+1} = sum z^n L^m_n(x)
  LaguerreZero,   // (1+z)^m e^{-xz} = sum z^n L^{m-n}_n(x)
  BesselEven,     // flat-band sequence l+m = -2k-1
  BesselOdd,      // flat-band sequence l+m = -2k-2
};

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

struct GeneratingFunctionSpec {
  Family family = Family::Hermite;
  double m = 0.0;     // Legendre order / Laguerre upper index
  int k = 0;          // Bessel sequence index
  double beta = 1.0;  // Bessel field strength

  /// Throws DomainError when the parameters do not fit the family.
  void validate() const;
};

struct TaylorSeries {
  std::vector<std::complex<double>> coefficients;
  double expansion_point = 0.0;
  char variable = 't';

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  std::complex<double> evaluate(std::complex<double> t) const;
};

struct SeriesSum {
  std::complex<double> partial_sum;
  double last_term_magnitude = 0.0;
};

std::complex<double> gf_closed(const GeneratingFunctionSpec& spec, double x, std::complex<double> t);

SeriesSum gf_series(const GeneratingFunctionSpec& spec, double x, std::complex<double> t, int order);

/// Coefficients of t^0 .. t^order of the closed form. For the Bessel families the
/// expansion runs in s = sqrt(t); a ConsistencyError is raised if the half-integer
/// powers of t fail to cancel to 1e-9 (relative to the largest coefficient).
TaylorSeries extract_taylor(const GeneratingFunctionSpec& spec, double x, int order);

/// Largest surviving half-integer-power coefficient of a Bessel-family closed form,
/// relative to the largest coefficient. Zero in exact arithmetic.
double bessel_half_power_residual(const GeneratingFunctionSpec& spec, double x, int order);

enum class Parity { Even, Odd };

// a_{l,m}(0, beta) comes printed as a two-branch formula. On the m <= l < 0 branch the
// printed power beta^{-l} leaves the flat-band basis normalised to beta^2 instead of 1;
// Corrected uses beta^{-l-1} there. The 0 <= l <= -m-1 branch is identical in both.
enum class BesselNormalization { Printed, Corrected };

double bessel_norm_coefficient(int l, int m, double beta,
                               BesselNormalization norm = BesselNormalization::Corrected);

/// Associated Bessel function B^{(0,beta)}_{m-k,-m-k-1}(x) (even) or
/// B^{(0,beta)}_{m-k-1,-m-k-1}(x) (odd), recovered from the Taylor coefficient of t^m.
double assoc_bessel(int k, Parity parity, int m, double beta, double x,
                    BesselNormalization norm = BesselNormalization::Corrected);

/// Same as assoc_bessel for m = 0..mmax from a single Taylor extraction.
std::vector<double> assoc_bessel_sequence(int k, Parity parity, int mmax, double beta, double x,
                                          BesselNormalization norm = BesselNormalization::Corrected);

/// Labels (l, m) of the m-th member of the even/odd sequence at index k.
std::pair<int, int> bessel_label(int k, Parity parity, int m);

}  // namespace gfcs::genfun
