#pragma once

// Check runners: each turns one identity (or printed formula) into a VerificationReport.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "gfcs/fock.hpp"
#include "gfcs/genfun.hpp"
#include "gfcs/report.hpp"

namespace gfcs::verify {

using cplx = std::complex<double>;

// --- generating functions --------------------------------------------------------

struct GfGrid {
  std::vector<double> xs;
  std::vector<cplx> ts;
};

/// nx points on [x_lo, x_hi] times t on rings of radius radius*{1/2, 1}; real_only keeps
/// t on [-radius, radius] (7 points) instead.
GfGrid make_gf_grid(double x_lo, double x_hi, int nx, double radius, bool real_only);

/// residual per point |closed - series(order)| / max(1, |closed|)
VerificationReport check_gf_identity(const genfun::GeneratingFunctionSpec& spec, const GfGrid& grid, int order,
                                     double tolerance);

/// Several parameter sets under one id; residuals are concatenated.
VerificationReport merge_reports(const std::string& check_id, const std::vector<VerificationReport>& parts,
                                 double tolerance);

/// Largest odd-half-power coefficient left in the Bessel-family closed forms.
VerificationReport check_bessel_half_powers(const std::vector<genfun::GeneratingFunctionSpec>& specs,
                                            const std::vector<double>& xs, int order, double tolerance);

// --- ladders ---------------------------------------------------------------------

enum class Algebra { HarmonicOscillator, SU11, WeylHeisenberg };

/// Commutation relations applied to a deterministic pseudo-random vector on the label
/// window; residual per relation and label.
VerificationReport check_commutators(Algebra algebra, int window, double lambda, unsigned long long seed,
                                     double tolerance);

enum class EigenFamily { Canonical, BarutGirardello, LandauA, LandauB };

/// eigen_residual of the family's lowering operator on its coherent state. LandauB uses
/// the eigenvalue fixed by the first coefficient ratio.
VerificationReport check_eigen(EigenFamily family, const std::vector<cplx>& args, int truncation, double lambda,
                               int landau_m, double tolerance);

// --- state / generating function correspondences -----------------------------------

enum class Correspondence { SHO, Sphere, BarutGirardello, KlauderPerelomov, Landau, FlatBandEven };

struct CorrespondenceParams {
  double lambda = 1.0;
  int m = 0;
  int k = 0;
  double beta = 1.0;
  double landau_scale = 1.0;
  int truncation = 0;  // 0: family default
};

/// coord1/coord2: x (SHO, CS), (theta, phi) sphere, (r, phi) Landau, (x, y) flat band.
struct CorrespondenceGrid {
  std::vector<double> coord1;
  std::vector<double> coord2{0.0};
  std::vector<cplx> args;
};

VerificationReport check_state_gf_correspondence(Correspondence family, const CorrespondenceParams& params,
                                                 const CorrespondenceGrid& grid, double tolerance);

// --- sphere normalisation and overlaps ---------------------------------------------

/// | <z|z> - 1 | of legendre_cs for m in [0, m_max] and the given radii/phases.
VerificationReport check_legendre_self_norm(int m_max, const std::vector<cplx>& args, double tolerance);

enum class LegendreForm { Printed, Closed };

/// |M_form(r) / M_series(r) - 1|, with the measured ratio in the notes.
VerificationReport check_legendre_norm_form(LegendreForm form, const std::vector<int>& ms,
                                            const std::vector<double>& radii, double tolerance);

/// |kernel - <z'|z>_series| over the pairs.
VerificationReport check_overlap(int m, const std::vector<std::pair<cplx, cplx>>& pairs, double tolerance,
                                 LegendreForm form = LegendreForm::Printed);

/// |line2 / line1 - 1| of the two printed measure lines at the given radii.
VerificationReport check_legendre_measure_lines(const std::vector<int>& ms, const std::vector<double>& radii,
                                                double tolerance);

// --- resolution of identity ------------------------------------------------------

enum class MomentFamily { SHO, FlatBandEven, FlatBandOddPrinted, FlatBandOddCorrected, SphereFirstLine, SphereSecondLine };

/// Diagonal moments for indices lo..hi (l for the sphere, with sector m). Residual
/// |moment/required - 1|; non-convergent integrals get +inf and a note.
VerificationReport check_moment_resolution(MomentFamily family, int sphere_m, int lo, int hi, double tolerance,
                                           double quad_tol = 1e-12);

// --- orthogonality ---------------------------------------------------------------

enum class OrthoModel { CalogeroSutherland, Sphere, Landau, FlatBandEven, FlatBandOdd };

struct OrthoParams {
  double lambda = 1.0;
  double beta = 1.0;
  int k = 0;
  bool bessel_printed_norm = false;
  double landau_scale = 1.0;
};

/// max |Gram - I| over: CS n <= index_max; sphere l <= index_max; Landau n, n+m <= index_max;
/// flat band members 0..index_max of sequence k.
VerificationReport check_orthogonality(OrthoModel model, const OrthoParams& params, int index_max,
                                       double tolerance);

// --- spectrum --------------------------------------------------------------------

/// Exact-integer comparison of spectrum() against direct substitution over a range.
VerificationReport check_spectrum_values(int range, double tolerance);

/// Informational: degeneracy claim over l in [l_lo, l_hi], m in [m_lo, m_hi]; residual is
/// the number of counterexample levels.
VerificationReport check_degeneracy(int l_lo, int l_hi, int m_lo, int m_hi);

}  // namespace gfcs::verify
