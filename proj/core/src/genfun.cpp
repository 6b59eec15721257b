#include "gfcs/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gfcs/errors.hpp"
#include "gfcs/power_series.hpp"
#include "gfcs/specfun.hpp"

namespace gfcs::genfun {

namespace {

using cplx = std::complex<double>;

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

bool is_bessel(Family f) { return f == Family::BesselEven || f == Family::BesselOdd; }

// Expansion of the bracketed flat-band expression in s = sqrt(t):
//   even: (1 - sqrt(x) s)^{2k} e^{beta s/sqrt(x)} - (1 + sqrt(x) s)^{2k} e^{-beta s/sqrt(x)}
//   odd:  (1 - sqrt(x) s)^{2k+1} e^{beta s/sqrt(x)} + (1 + sqrt(x) s)^{2k+1} e^{-beta s/sqrt(x)}
// The two halves are built independently so that the parity cancellation is a real check.
PowerSeries bessel_bracket(const GeneratingFunctionSpec& spec, double x, std::size_t s_order) {
  const double sx = std::sqrt(x);
  const bool even = spec.family == Family::BesselEven;
  const double power = even ? 2.0 * spec.k : 2.0 * spec.k + 1.0;
  const auto left = pow(PowerSeries::linear(1.0, -sx, s_order), power) *
                    PowerSeries::exponential(spec.beta / sx, s_order);
  const auto right = pow(PowerSeries::linear(1.0, sx, s_order), power) *
                     PowerSeries::exponential(-spec.beta / sx, s_order);
  return even ? left - right : left + right;
}

struct BesselSplit {
  std::vector<double> integer_powers;  // coefficients of t^m
  double half_power_residual = 0.0;
};

BesselSplit split_bessel(const GeneratingFunctionSpec& spec, double x, int order) {
  if (!(x > 0.0)) throw DomainError("Bessel generating function requires x > 0");
  const bool even = spec.family == Family::BesselEven;
  const std::size_t s_order = 2 * static_cast<std::size_t>(order) + 1;
  const auto g = bessel_bracket(spec, x, s_order);

  double scale = 0.0;
  for (double v : g.coefficients()) scale = std::max(scale, std::abs(v));
  double stray = 0.0;
  BesselSplit out;
  out.integer_powers.resize(order + 1);
  // even: x^{-k}/(2 sqrt(x) s) * g(s) keeps odd powers of s
  // odd:  x^{-k-1}/2 * g(s) keeps even powers of s
  const double pref = even ? std::pow(x, -spec.k) / (2.0 * std::sqrt(x)) : std::pow(x, -spec.k - 1.0) / 2.0;
  for (int m = 0; m <= order; ++m) {
    const std::size_t kept = even ? 2 * m + 1 : 2 * m;
    const std::size_t dropped = even ? 2 * m : 2 * m + 1;
    out.integer_powers[m] = pref * g[kept];
    stray = std::max(stray, std::abs(g[dropped]));
  }
  out.half_power_residual = scale > 0.0 ? stray / scale : 0.0;
  return out;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Hermite: return "hermite";
    case Family::LegendreM: return "legendre";
    case Family::LaguerrePlus: return "laguerre-plus";
    case Family::LaguerreMinus: return "laguerre-minus";
    case Family::LaguerreZero: return "laguerre-zero";
    case Family::BesselEven: return "bessel-even";
    case Family::BesselOdd: return "bessel-odd";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (auto f : {Family::Hermite, Family::LegendreM, Family::LaguerrePlus, Family::LaguerreMinus,
                 Family::LaguerreZero, Family::BesselEven, Family::BesselOdd}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown generating-function family: " + std::string(name));
}

void GeneratingFunctionSpec::validate() const {
  switch (family) {
    case Family::Hermite:
      return;
    case Family::LegendreM:
      if (!is_integer(m) || m < 0) throw DomainError("LegendreM requires integer m >= 0");
      return;
    case Family::LaguerrePlus:
      if (!(m > -1.0)) throw DomainError("LaguerrePlus requires m > -1");
      return;
    case Family::LaguerreMinus:
    case Family::LaguerreZero:
      if (!std::isfinite(m)) throw DomainError("Laguerre index must be finite");
      return;
    case Family::BesselEven:
    case Family::BesselOdd:
      if (k < 0) throw DomainError("Bessel families require k >= 0");
      if (!(beta > 0.0)) throw DomainError("Bessel families require beta > 0");
      return;
  }
}

cplx TaylorSeries::evaluate(cplx t) const {
  cplx acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

cplx gf_closed(const GeneratingFunctionSpec& spec, double x, cplx t) {
  spec.validate();
  switch (spec.family) {
    case Family::Hermite:
      return std::exp(2.0 * x * t - t * t);

    case Family::LegendreM: {
      if (std::abs(x) > 1.0) throw DomainError("LegendreM requires |x| <= 1");
      if (!(std::abs(t) < 1.0)) throw DomainError("LegendreM requires |t| < 1");
      const int m = static_cast<int>(spec.m);
      double lead = 1.0;
      for (int j = 1; j <= m; ++j) lead *= 2.0 * j - 1.0;  // (2m)!/(2^m m!)
      lead *= std::pow(1.0 - x * x, 0.5 * m);
      return lead * std::pow(1.0 + t * t - 2.0 * x * t, -(m + 0.5));
    }

    case Family::LaguerrePlus: {
      if (t.imag() != 0.0) {
        throw DomainError("LaguerrePlus closed form is evaluated on the real axis only");
      }
      const double z = t.real();
      const double w = x * z;
      double bessel_part = 0.0;
      if (w > 0.0) {
        bessel_part = std::pow(w, -0.5 * spec.m) * specfun::bessel_j(spec.m, 2.0 * std::sqrt(w));
      } else {
        // w <= 0: J turns into I; the ascending series has positive terms only.
        const double q = -w;
        double term = 1.0 / std::tgamma(spec.m + 1.0);
        double sum = term;
        for (int j = 1; j < 1000; ++j) {
          term *= q / (j * (spec.m + j));
          sum += term;
          if (term < 1e-18 * sum) break;
        }
        bessel_part = sum;
      }
      return bessel_part * std::exp(z);
    }

    case Family::LaguerreMinus: {
      if (!(std::abs(t) < 1.0)) throw DomainError("LaguerreMinus requires |z| < 1");
      const cplx one_minus = 1.0 - t;
      return std::exp(-x * t / one_minus) * std::pow(one_minus, -(spec.m + 1.0));
    }

    case Family::LaguerreZero: {
      if (!(std::abs(t) < 1.0)) throw DomainError("LaguerreZero requires |z| < 1");
      return std::pow(1.0 + t, spec.m) * std::exp(-x * t);
    }

    case Family::BesselEven:
    case Family::BesselOdd: {
      if (!(x > 0.0)) throw DomainError("Bessel generating functions require x > 0");
      const double sx = std::sqrt(x);
      const int k = spec.k;
      const double beta = spec.beta;
      if (t == cplx(0.0)) {
        // t -> 0 limit of the bracket
        if (spec.family == Family::BesselEven) {
          return std::pow(x, -k - 0.5) * (beta / sx - 2.0 * k * sx);
        }
        return std::pow(x, -k - 1.0);
      }
      const cplx s = std::sqrt(t);
      const cplx u = sx * s;  // sqrt(xt), principal branch since x > 0
      const cplx e_plus = std::exp(beta * s / sx);
      const cplx e_minus = std::exp(-beta * s / sx);
      if (spec.family == Family::BesselEven) {
        const double n = 2.0 * k;
        return std::pow(x, -k) / (2.0 * u) *
               (std::pow(1.0 - u, n) * e_plus - std::pow(1.0 + u, n) * e_minus);
      }
      const double n = 2.0 * k + 1.0;
      return std::pow(x, -k - 1.0) / 2.0 *
             (std::pow(1.0 - u, n) * e_plus + std::pow(1.0 + u, n) * e_minus);
    }
  }
  throw DomainError("gf_closed: unhandled family");
}

SeriesSum gf_series(const GeneratingFunctionSpec& spec, double x, cplx t, int order) {
  spec.validate();
  if (order < 0) throw DomainError("gf_series: negative order");

  SeriesSum out;
  cplx tn = 1.0;
  auto accumulate = [&](int n, cplx term) {
    out.partial_sum += term;
    if (n == order) out.last_term_magnitude = std::abs(term);
  };

  switch (spec.family) {
    case Family::Hermite:
      for (int n = 0; n <= order; ++n, tn *= t) {
        const double h = specfun::hermite(n, x) * std::exp(-specfun::log_factorial(n));
        accumulate(n, tn * h);
      }
      break;

    case Family::LegendreM: {
      const int m = static_cast<int>(spec.m);
      const auto p = specfun::assoc_legendre_sequence(m, m + order, x);
      for (int l = 0; l <= order; ++l, tn *= t) accumulate(l, tn * p[l]);
      break;
    }

    case Family::LaguerrePlus: {
      const auto lag = specfun::assoc_laguerre_sequence(order, spec.m, x);
      for (int n = 0; n <= order; ++n, tn *= t) {
        accumulate(n, tn * lag[n] * std::exp(-std::lgamma(n + spec.m + 1.0)));
      }
      break;
    }

    case Family::LaguerreMinus: {
      const auto lag = specfun::assoc_laguerre_sequence(order, spec.m, x);
      for (int n = 0; n <= order; ++n, tn *= t) accumulate(n, tn * lag[n]);
      break;
    }

    case Family::LaguerreZero:
      for (int n = 0; n <= order; ++n, tn *= t) {
        accumulate(n, tn * specfun::assoc_laguerre(n, spec.m - n, x));
      }
      break;

    case Family::BesselEven:
    case Family::BesselOdd: {
      const bool even = spec.family == Family::BesselEven;
      const auto parity = even ? Parity::Even : Parity::Odd;
      const auto b = assoc_bessel_sequence(spec.k, parity, order, spec.beta, x,
                                           BesselNormalization::Printed);
      for (int m = 0; m <= order; ++m, tn *= t) {
        const auto [l, mm] = bessel_label(spec.k, parity, m);
        const double fact = std::exp(specfun::log_factorial(even ? 2 * m + 1 : 2 * m));
        const double a = bessel_norm_coefficient(l, mm, spec.beta, BesselNormalization::Printed);
        accumulate(m, tn * b[m] / (fact * a));
      }
      break;
    }
  }
  return out;
}

TaylorSeries extract_taylor(const GeneratingFunctionSpec& spec, double x, int order) {
  spec.validate();
  if (order < 0) throw DomainError("extract_taylor: negative order");
  const auto n = static_cast<std::size_t>(order);

  PowerSeries series(n);
  switch (spec.family) {
    case Family::Hermite: {
      PowerSeries arg(n);
      arg[0] = 0.0;
      if (n >= 1) arg[1] = 2.0 * x;
      if (n >= 2) arg[2] = -1.0;
      series = exp(arg);
      break;
    }
    case Family::LegendreM: {
      if (std::abs(x) > 1.0) throw DomainError("LegendreM requires |x| <= 1");
      const int m = static_cast<int>(spec.m);
      PowerSeries quad(n);
      quad[0] = 1.0;
      if (n >= 1) quad[1] = -2.0 * x;
      if (n >= 2) quad[2] = 1.0;
      double lead = 1.0;
      for (int j = 1; j <= m; ++j) lead *= 2.0 * j - 1.0;
      lead *= std::pow(1.0 - x * x, 0.5 * m);
      series = lead * pow(quad, -(m + 0.5));
      break;
    }
    case Family::LaguerrePlus: {
      // w^{-m/2} J_m(2 sqrt(w)) solves w y'' + (m+1) y' + y = 0 with y(0) = 1/Gamma(m+1).
      PowerSeries bessel_part(n);
      double y = 1.0 / std::tgamma(spec.m + 1.0);
      double xp = 1.0;
      for (std::size_t j = 0; j <= n; ++j) {
        bessel_part[j] = y * xp;
        y *= -1.0 / ((j + 1.0) * (j + 1.0 + spec.m));
        xp *= x;
      }
      series = bessel_part * PowerSeries::exponential(1.0, n);
      break;
    }
    case Family::LaguerreMinus: {
      const auto one_minus = PowerSeries::linear(1.0, -1.0, n);
      const auto ratio = PowerSeries::linear(0.0, -x, n) * reciprocal(one_minus);
      series = exp(ratio) * pow(one_minus, -(spec.m + 1.0));
      break;
    }
    case Family::LaguerreZero:
      series = pow(PowerSeries::linear(1.0, 1.0, n), spec.m) * PowerSeries::exponential(-x, n);
      break;
    case Family::BesselEven:
    case Family::BesselOdd: {
      const auto split = split_bessel(spec, x, order);
      if (split.half_power_residual > 1e-9) {
        throw ConsistencyError("Bessel generating function keeps half-integer powers of t (residual " +
                               std::to_string(split.half_power_residual) + ")");
      }
      series = PowerSeries(split.integer_powers);
      break;
    }
  }

  TaylorSeries out;
  out.variable = spec.family == Family::LaguerrePlus || spec.family == Family::LaguerreMinus ||
                         spec.family == Family::LaguerreZero
                     ? 'z'
                     : 't';
  out.coefficients.assign(series.coefficients().begin(), series.coefficients().end());
  return out;
}

double bessel_half_power_residual(const GeneratingFunctionSpec& spec, double x, int order) {
  spec.validate();
  if (!is_bessel(spec.family)) return 0.0;
  return split_bessel(spec, x, order).half_power_residual;
}

std::pair<int, int> bessel_label(int k, Parity parity, int m) {
  if (parity == Parity::Even) return {m - k, -m - k - 1};
  return {m - k - 1, -m - k - 1};
}

double bessel_norm_coefficient(int l, int m, double beta, BesselNormalization norm) {
  if (!(beta > 0.0)) throw DomainError("bessel_norm_coefficient: beta must be positive");
  auto sign = [](int e) { return (e % 2 == 0) ? 1.0 : -1.0; };
  if (m <= l && l < 0) {
    const double denom = std::exp(0.5 * (specfun::log_factorial(l - m) + specfun::log_factorial(-l - m - 1)));
    const double power = norm == BesselNormalization::Printed ? -l : -l - 1;
    return sign(-m) * std::pow(beta, power) / denom;
  }
  if (0 <= l && l <= -m - 1) {
    const double denom = std::exp(0.5 * (specfun::log_factorial(l - m) + specfun::log_factorial(-l - m - 1)));
    return sign(-l - m - 1) * std::pow(beta, -l - 1.0) / denom;
  }
  throw DomainError("a_{l,m}(0,beta) undefined for l = " + std::to_string(l) + ", m = " + std::to_string(m));
}

std::vector<double> assoc_bessel_sequence(int k, Parity parity, int mmax, double beta, double x,
                                          BesselNormalization norm) {
  if (mmax < 0) throw DomainError("assoc_bessel: negative index");
  GeneratingFunctionSpec spec{parity == Parity::Even ? Family::BesselEven : Family::BesselOdd, 0.0, k, beta};
  const auto taylor = extract_taylor(spec, x, mmax);
  std::vector<double> out(mmax + 1);
  for (int m = 0; m <= mmax; ++m) {
    const auto [l, mm] = bessel_label(k, parity, m);
    const double log_fact = specfun::log_factorial(parity == Parity::Even ? 2 * m + 1 : 2 * m);
    out[m] = std::exp(log_fact) * bessel_norm_coefficient(l, mm, beta, norm) * taylor.coefficients[m].real();
  }
  return out;
}

double assoc_bessel(int k, Parity parity, int m, double beta, double x, BesselNormalization norm) {
  if (m < 0) throw DomainError("assoc_bessel: negative index");
  return assoc_bessel_sequence(k, parity, m, beta, x, norm).back();
}

}  // namespace gfcs::genfun
