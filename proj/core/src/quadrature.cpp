#include "gfcs/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gfcs/errors.hpp"

namespace gfcs::verify {

QuadratureResult integrate_radial(const std::function<double(double)>& f, Support support,
                                  double target_rel_err) {
  if (!(target_rel_err > 0.0)) throw DomainError("integrate_radial: target_rel_err must be > 0");
  if (!f) throw DomainError("integrate_radial: empty integrand");
  int calls = 0;
  auto counted = [&](double r) {
    ++calls;
    return f(r);
  };
  const double upper = support == Support::UnitInterval ? 1.0 : std::numeric_limits<double>::infinity();
  double error = 0.0;
  double l1 = 0.0;
  constexpr unsigned kMaxDepth = 15;  // deeper only chases roundoff
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      counted, 0.0, upper, kMaxDepth, target_rel_err, &error, &l1);
  QuadratureResult out{value, error, calls};
  if (!std::isfinite(value) || !(error <= target_rel_err * l1 || error == 0.0)) {
    throw ConvergenceError("integrate_radial: no convergence within node budget", value, error);
  }
  return out;
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double target_rel_err) {
  if (!(target_rel_err > 0.0)) throw DomainError("integrate_interval: target_rel_err must be > 0");
  if (!f) throw DomainError("integrate_interval: empty integrand");
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate_interval: need a < b finite");
  int calls = 0;
  auto counted = [&](double r) {
    ++calls;
    return f(r);
  };
  double error = 0.0;
  double l1 = 0.0;
  constexpr unsigned kMaxDepth = 15;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      counted, a, b, kMaxDepth, target_rel_err, &error, &l1);
  QuadratureResult out{value, error, calls};
  if (!std::isfinite(value) || !(error <= target_rel_err * l1 || error == 0.0)) {
    throw ConvergenceError("integrate_interval: no convergence within node budget", value, error);
  }
  return out;
}

EndpointProbe probe_endpoint(const std::function<double(double)>& f, double lo, double hi, bool at_upper) {
  if (!(hi > lo)) throw DomainError("probe_endpoint: need lo < hi");
  EndpointProbe p;
  const double mid = 0.5 * (lo + hi);
  for (int e = 2; e <= 7; ++e) {
    const double eps = std::pow(10.0, -e) * (hi - lo);
    double v = 0.0;
    try {
      v = at_upper ? integrate_interval(f, mid, hi - eps, 1e-11).value : integrate_interval(f, lo + eps, mid, 1e-11).value;
    } catch (const ConvergenceError& err) {
      v = err.best_estimate();
    }
    p.cutoffs.push_back(eps);
    p.partials.push_back(v);
  }
  // convergent endpoint behaviour (x^a, a > -1) shrinks the increments by 10^{-(1+a)} per decade
  const std::size_t n = p.partials.size();
  const double last = std::abs(p.partials[n - 1] - p.partials[n - 2]);
  const double prev = std::abs(p.partials[n - 2] - p.partials[n - 3]);
  p.divergent = prev > 0.0 && last >= 0.9 * prev && last > 1e-9 * std::abs(p.partials[n - 1]);
  return p;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace gfcs::verify
