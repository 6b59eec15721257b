#pragma once

// Reference values computed along paths that share no code with the library:
// explicit sums in long double and Boost.Math special functions.

#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <boost/math/special_functions/spherical_harmonic.hpp>

namespace oracle {

using ld = long double;

inline ld factorial(int n) {
  ld f = 1.0L;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// H_n(x) = n! sum_k (-1)^k (2x)^{n-2k} / (k! (n-2k)!)
inline double hermite_explicit(int n, double x) {
  ld sum = 0.0L;
  for (int k = 0; 2 * k <= n; ++k) {
    const ld term = std::pow(2.0L * x, n - 2 * k) / (factorial(k) * factorial(n - 2 * k));
    sum += (k % 2 == 0 ? term : -term);
  }
  return static_cast<double>(sum * factorial(n));
}

/// L^a_n(x) = sum_j binom(n+a, n-j) (-x)^j / j!, binomial as a finite product.
inline double laguerre_explicit(int n, double a, double x) {
  ld sum = 0.0L;
  for (int j = 0; j <= n; ++j) {
    ld binom = 1.0L;
    for (int i = 1; i <= n - j; ++i) binom *= (static_cast<ld>(a) + j + i) / i;
    sum += binom * std::pow(static_cast<ld>(-x), j) / factorial(j);
  }
  return static_cast<double>(sum);
}

/// P^m_l(x) without the Condon-Shortley phase.
inline double legendre_no_phase(int l, int m, double x) {
  return (m % 2 == 0 ? 1.0 : -1.0) * boost::math::legendre_p(l, m, x);
}

inline double bessel_j(double nu, double x) { return boost::math::cyl_bessel_j(nu, x); }

inline double hyp2f1(double a, double b, double c, double x) {
  return boost::math::hypergeometric_pFq({a, b}, {c}, x);
}

inline std::complex<double> ylm(int l, int m, double theta, double phi) {
  return boost::math::spherical_harmonic(l, m, theta, phi);
}

inline double hermite_function(int n, double x) {
  const ld norm = std::sqrt(std::pow(2.0L, n) * factorial(n) * std::sqrt(std::numbers::pi_v<ld>));
  return static_cast<double>(boost::math::hermite(n, static_cast<ld>(x)) * std::exp(-0.5L * x * x) / norm);
}

/// sum_{l=m}^{m+terms} r^{2l} (l+m)! / ((l-m)! (2l+1)) by brute force
inline double legendre_norm_brute(int m, double r, int terms) {
  ld sum = 0.0L;
  for (int l = m; l <= m + terms; ++l) {
    sum += std::pow(static_cast<ld>(r), 2 * l) * factorial(l + m) / (factorial(l - m) * (2.0L * l + 1.0L));
  }
  return static_cast<double>(sum);
}

/// normalised Landau function with sqrt(c/pi) prefactor, M >= 0
inline std::complex<double> landau_ket(int n, int m, double r, double phi, double c) {
  const ld u = c * static_cast<ld>(r) * r;
  const ld lag = boost::math::laguerre(static_cast<unsigned>(n), static_cast<unsigned>(m), u);
  const ld amp = std::sqrt(c / std::numbers::pi_v<ld>) * std::sqrt(factorial(n) / factorial(n + m)) *
                 std::pow(std::sqrt(c) * static_cast<ld>(r), m) * std::exp(-u / 2) * lag;
  return std::polar(static_cast<double>(amp), m * phi);
}

}  // namespace oracle
