#pragma once

// Adaptive radial quadrature and fixed product rules used by the check runners.

#include <functional>
#include <vector>

namespace gfcs::verify {

enum class Support { UnitInterval, HalfLine };

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, from the Gauss/Kronrod difference
  int nodes_used = 0;
};

/// Adaptive 31-point Gauss-Kronrod on [0, 1] or [0, inf). Converged when the error
/// estimate is below target_rel_err times the L1 norm of f. Throws ConvergenceError
/// with the best estimate otherwise.
QuadratureResult integrate_radial(const std::function<double(double)>& f, Support support,
                                  double target_rel_err);

/// Same rule on a finite [a, b].
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double target_rel_err);

struct EndpointProbe {
  bool divergent = false;
  std::vector<double> cutoffs;   // eps
  std::vector<double> partials;  // integral with the endpoint cut back by eps
};

/// Partial integrals of f over [lo + eps, mid] (at_upper = false) or [mid, hi - eps] for
/// eps = 1e-2 .. 1e-7. Divergent when successive increments stop shrinking.
EndpointProbe probe_endpoint(const std::function<double(double)>& f, double lo, double hi, bool at_upper);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

}  // namespace gfcs::verify
