#pragma once

// Scalar special-function kernels.
//
// Conventions:
//  * assoc_legendre carries no Condon-Shortley phase: P^m_m(x) = (2m-1)!! (1-x^2)^{m/2} > 0.
//    The (-1)^m lives in spherical_harmonic only.
//  * assoc_laguerre accepts any real upper index, including negative integers.
//
// All functions are pure and safe to call concurrently.

#include <complex>
#include <span>
#include <vector>

namespace gfcs::specfun {

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

/// Orthonormal oscillator eigenfunction e^{-x^2/2} H_n(x) / sqrt(2^n n! sqrt(pi)),
/// evaluated by the normalized three-term recurrence (no overflow for large n).
double hermite_function(int n, double x);

double assoc_legendre(int l, int m, double x);

/// P^m_m(x), P^m_{m+1}(x), ..., P^m_{lmax}(x) in one upward sweep.
std::vector<double> assoc_legendre_sequence(int m, int lmax, double x);

double assoc_laguerre(int n, double alpha, double x);

/// L^alpha_0(x) ... L^alpha_nmax(x).
std::vector<double> assoc_laguerre_sequence(int nmax, double alpha, double x);

/// Bessel function of the first kind J_nu(x), real order nu > -1 and x >= 0.
double bessel_j(double nu, double x);

/// Gauss hypergeometric 2F1(a, b; c; x) on the open unit disc.
double gauss_2f1(double a, double b, double c, double x);
std::complex<double> gauss_2f1(double a, double b, double c, std::complex<double> x);

/// Y^m_l(theta, phi) = (-1)^m sqrt((2l+1)/(4pi) (l-m)!/(l+m)!) e^{i m phi} P^m_l(cos theta).
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

double log_factorial(int n);

/// log((n+k)!/n!) without forming either factorial.
double log_factorial_ratio(int n_plus_k, int n);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
double pochhammer(double a, int n);

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> terms);

}  // namespace gfcs::specfun
