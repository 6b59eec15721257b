#pragma once

// Truncated power series with real coefficients, a_0 + a_1 s + ... + a_N s^N.
//
// Every operation keeps the order of its left operand (or the smaller order when
// combining two series). Coefficients are exact up to rounding: no finite differences.

#include <cstddef>
#include <vector>

namespace gfcs {

class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1, 0.0) {}
  explicit PowerSeries(std::vector<double> coefficients);

  static PowerSeries constant(double value, std::size_t order);
  /// a + b s
  static PowerSeries linear(double a, double b, std::size_t order);
  /// Coefficients of exp(rate * s): rate^n / n!.
  static PowerSeries exponential(double rate, std::size_t order);

  std::size_t order() const noexcept { return c_.size() - 1; }
  double operator[](std::size_t n) const { return c_.at(n); }
  double& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<double>& coefficients() const noexcept { return c_; }

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(double k);

  /// Value at s by Horner's rule.
  double evaluate(double s) const;

  /// f(-s)
  PowerSeries reflected() const;

 private:
  std::vector<double> c_;
};

PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs);
PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs);
PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);
PowerSeries operator*(PowerSeries lhs, double k);
PowerSeries operator*(double k, PowerSeries rhs);

/// exp(f); any constant term allowed.
PowerSeries exp(const PowerSeries& f);

/// f^alpha for real alpha; requires f[0] > 0 and takes the principal branch.
PowerSeries pow(const PowerSeries& f, double alpha);

/// 1/f; requires f[0] != 0.
PowerSeries reciprocal(const PowerSeries& f);

}  // namespace gfcs
