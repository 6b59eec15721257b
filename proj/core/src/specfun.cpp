#include "gfcs/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>

#include "gfcs/errors.hpp"

namespace gfcs::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

constexpr int kFactorialCache = 256;

const std::array<double, kFactorialCache + 1>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kFactorialCache + 1> t{};
    t[0] = 0.0;
    for (int k = 1; k <= kFactorialCache; ++k) {
      t[k] = t[k - 1] + std::log(static_cast<double>(k));
    }
    return t;
  }();
  return table;
}

// Ascending series J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k).
double bessel_j_series(double nu, double x) {
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (nu + k));
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0) * (sum + comp);
}

// Miller backward recurrence normalised with
//   (x/2)^nu / Gamma(nu+1) = J_nu + sum_{k>=1} (nu+2k) (nu+1)_{k-1} / k! J_{nu+2k}.
double bessel_j_miller(double nu, double x) {
  int start = static_cast<int>(x) + 40 + static_cast<int>(std::sqrt(60.0 * x));
  if (start % 2 != 0) ++start;

  // weights[k] for the even offsets 2k, k >= 1
  std::vector<double> weight(start / 2 + 1, 0.0);
  double poch = 1.0;  // (nu+1)_{k-1}
  double fact = 1.0;  // k!
  for (int k = 1; k <= start / 2; ++k) {
    if (k > 1) poch *= nu + k - 1;
    fact *= k;
    weight[k] = (nu + 2.0 * k) * poch / fact;
  }

  double upper = 0.0;   // J_{nu+j+1}
  double current = 1e-300;  // J_{nu+j}
  double norm = 0.0;
  for (int j = start; j > 0; --j) {
    if (j % 2 == 0) norm += weight[j / 2] * current;
    const double lower = 2.0 * (nu + j) / x * current - upper;
    upper = current;
    current = lower;
    if (std::abs(current) > 1e250) {
      current *= 1e-250;
      upper *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += current;
  return current / norm * std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
}

}  // namespace

double hermite(int n, double x) {
  if (n < 0) throw DomainError("hermite: negative degree");
  require_finite(x, "hermite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_function(int n, double x) {
  if (n < 0) throw DomainError("hermite_function: negative degree");
  require_finite(x, "hermite_function");
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> assoc_legendre_sequence(int m, int lmax, double x) {
  if (m < 0 || lmax < m) throw DomainError("assoc_legendre: require 0 <= m <= l");
  require_finite(x, "assoc_legendre");
  if (std::abs(x) > 1.0) throw DomainError("assoc_legendre: |x| > 1");

  std::vector<double> out;
  out.reserve(lmax - m + 1);
  double pmm = 1.0;
  for (int k = 1; k <= m; ++k) pmm *= 2.0 * k - 1.0;
  pmm *= std::pow(1.0 - x * x, 0.5 * m);
  out.push_back(pmm);
  if (lmax == m) return out;

  double prev = pmm;
  double cur = x * (2.0 * m + 1.0) * pmm;
  out.push_back(cur);
  for (int l = m + 1; l < lmax; ++l) {
    const double next = ((2.0 * l + 1.0) * x * cur - (l + m) * prev) / (l - m + 1.0);
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

double assoc_legendre(int l, int m, double x) {
  return assoc_legendre_sequence(m, l, x).back();
}

std::vector<double> assoc_laguerre_sequence(int nmax, double alpha, double x) {
  if (nmax < 0) throw DomainError("assoc_laguerre: negative degree");
  require_finite(alpha, "assoc_laguerre");
  require_finite(x, "assoc_laguerre");
  std::vector<double> out;
  out.reserve(nmax + 1);
  out.push_back(1.0);
  if (nmax == 0) return out;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  out.push_back(cur);
  for (int n = 1; n < nmax; ++n) {
    const double next = ((2.0 * n + 1.0 + alpha - x) * cur - (n + alpha) * prev) / (n + 1.0);
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

double assoc_laguerre(int n, double alpha, double x) {
  if (alpha > -1.0) return assoc_laguerre_sequence(n, alpha, x).back();
  if (n < 0) throw DomainError("assoc_laguerre: negative degree");
  require_finite(alpha, "assoc_laguerre");
  require_finite(x, "assoc_laguerre");
  // integer a = -k, k <= n: L^{-k}_n(x) = (-x)^k (n-k)!/n! L^k_{n-k}(x)
  if (alpha == std::floor(alpha) && -alpha <= n) {
    const int k = static_cast<int>(-alpha);
    double f = 1.0;
    for (int i = n - k + 1; i <= n; ++i) f *= -x / i;
    return f * assoc_laguerre_sequence(n - k, k, x).back();
  }
  // upward recurrence loses everything for a ~ -n; explicit sum
  //   L^a_n(x) = sum_j C(n+a, j) (-x)^{n-j} / (n-j)!
  std::vector<double> pw(n + 1);
  pw[0] = 1.0;
  for (int k = 1; k <= n; ++k) pw[k] = pw[k - 1] * (-x) / k;
  const double top = n + alpha;
  double binom = 1.0;
  double sum = 0.0;
  double comp = 0.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) binom *= (top - j + 1) / j;
    const double v = binom * pw[n - j];
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double bessel_j(double nu, double x) {
  require_finite(nu, "bessel_j");
  require_finite(x, "bessel_j");
  if (x < 0.0) throw DomainError("bessel_j: negative argument");
  if (nu <= -1.0) throw DomainError("bessel_j: order must exceed -1");
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError("bessel_j: J_nu(0) is singular for -1 < nu < 0");
  }
  if (x < 2.0) return bessel_j_series(nu, x);
  return bessel_j_miller(nu, x);
}

namespace {

template <typename T>
T hypergeometric_series(double a, double b, double c, T x) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1: c is a non-positive integer");
  }
  if (!(std::abs(x) < 1.0)) throw DomainError("gauss_2f1: requires |x| < 1");

  T term = T(1.0);
  T sum = T(1.0);
  T comp = T(0.0);
  int small_run = 0;
  for (int k = 0; k < 200000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    if (term == T(0.0)) break;  // terminating series
    // Neumaier update per component
    const T t = sum + term;
    if constexpr (std::is_same_v<T, double>) {
      comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    } else {
      auto fix = [](double s, double v, double r) {
        return std::abs(s) >= std::abs(v) ? (s - r) + v : (v - r) + s;
      };
      comp += T(fix(sum.real(), term.real(), t.real()), fix(sum.imag(), term.imag(), t.imag()));
    }
    sum = t;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
  }
  return sum + comp;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x) {
  require_finite(x, "gauss_2f1");
  return hypergeometric_series<double>(a, b, c, x);
}

std::complex<double> gauss_2f1(double a, double b, double c, std::complex<double> x) {
  require_finite(x.real(), "gauss_2f1");
  require_finite(x.imag(), "gauss_2f1");
  return hypergeometric_series<std::complex<double>>(a, b, c, x);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw DomainError("spherical_harmonic: require |m| <= l");
  require_finite(theta, "spherical_harmonic");
  require_finite(phi, "spherical_harmonic");
  if (m < 0) {
    const auto y = spherical_harmonic(l, -m, theta, phi);
    return ((-m) % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
  }
  const double x = std::clamp(std::cos(theta), -1.0, 1.0);
  const double norm =
      std::sqrt((2.0 * l + 1.0) / (4.0 * kPi)) * std::exp(-0.5 * log_factorial_ratio(l + m, l - m));
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  return sign * norm * assoc_legendre(l, m, x) * std::polar(1.0, m * phi);
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n <= kFactorialCache) return log_factorial_table()[n];
  return std::lgamma(n + 1.0);
}

double log_factorial_ratio(int n_plus_k, int n) {
  if (n < 0 || n_plus_k < n) throw DomainError("log_factorial_ratio: require 0 <= n <= n+k");
  if (n_plus_k <= kFactorialCache) {
    const auto& t = log_factorial_table();
    return t[n_plus_k] - t[n];
  }
  double acc = 0.0;
  for (int j = n + 1; j <= n_plus_k; ++j) acc += std::log(static_cast<double>(j));
  return acc;
}

double pochhammer(double a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative count");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

double compensated_sum(std::span<const double> terms) {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : terms) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace gfcs::specfun
