#include "gfcs/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gfcs/errors.hpp"

namespace gfcs {

PowerSeries::PowerSeries(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) c_.push_back(0.0);
}

PowerSeries PowerSeries::constant(double value, std::size_t order) {
  PowerSeries p(order);
  p.c_[0] = value;
  return p;
}

PowerSeries PowerSeries::linear(double a, double b, std::size_t order) {
  PowerSeries p(order);
  p.c_[0] = a;
  if (order >= 1) p.c_[1] = b;
  return p;
}

PowerSeries PowerSeries::exponential(double rate, std::size_t order) {
  PowerSeries p(order);
  double term = 1.0;
  for (std::size_t n = 0; n <= order; ++n) {
    p.c_[n] = term;
    term *= rate / static_cast<double>(n + 1);
  }
  return p;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  c_.resize(std::min(c_.size(), rhs.c_.size()));
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += rhs.c_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  c_.resize(std::min(c_.size(), rhs.c_.size()));
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= rhs.c_[n];
  return *this;
}

PowerSeries& PowerSeries::operator*=(double k) {
  for (auto& v : c_) v *= k;
  return *this;
}

double PowerSeries::evaluate(double s) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

PowerSeries PowerSeries::reflected() const {
  PowerSeries p = *this;
  for (std::size_t n = 1; n < p.c_.size(); n += 2) p.c_[n] = -p.c_[n];
  return p;
}

PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }
PowerSeries operator*(PowerSeries lhs, double k) { return lhs *= k; }
PowerSeries operator*(double k, PowerSeries rhs) { return rhs *= k; }

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  PowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) acc += lhs[k] * rhs[n - k];
    out[n] = acc;
  }
  return out;
}

// g = e^f  =>  g' = f' g  =>  n g_n = sum_{k=1}^n k f_k g_{n-k}
PowerSeries exp(const PowerSeries& f) {
  const std::size_t order = f.order();
  PowerSeries g(order);
  g[0] = std::exp(f[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * f[k] * g[n - k];
    g[n] = acc / static_cast<double>(n);
  }
  return g;
}

// g = f^a  =>  f g' = a f' g  =>  n f_0 g_n = sum_{k=1}^n (a k - (n - k)) f_k g_{n-k}
PowerSeries pow(const PowerSeries& f, double alpha) {
  if (!(f[0] > 0.0)) throw DomainError("PowerSeries pow: constant term must be positive");
  const std::size_t order = f.order();
  PowerSeries g(order);
  g[0] = std::pow(f[0], alpha);
  for (std::size_t n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += (alpha * static_cast<double>(k) - static_cast<double>(n - k)) * f[k] * g[n - k];
    }
    g[n] = acc / (static_cast<double>(n) * f[0]);
  }
  return g;
}

PowerSeries reciprocal(const PowerSeries& f) {
  if (f[0] == 0.0) throw DomainError("PowerSeries reciprocal: zero constant term");
  const std::size_t order = f.order();
  PowerSeries g(order);
  g[0] = 1.0 / f[0];
  for (std::size_t n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g[n] = -acc / f[0];
  }
  return g;
}

}  // namespace gfcs
