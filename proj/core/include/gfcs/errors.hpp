#pragma once

#include <stdexcept>
#include <string>

namespace gfcs {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameter sits on a pole of the evaluated function (e.g. 2F1 with c = 0, -1, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative or adaptive procedure ran out of budget; carries the best estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_(best_estimate), error_(error_estimate) {}

  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double best_;
  double error_;
};

// A closed form failed a structural self-check (e.g. surviving half-integer powers).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bad command line / configuration / unknown check id.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gfcs
