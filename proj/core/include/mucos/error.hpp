#pragma once

#include <stdexcept>
#include <string>

namespace mucos {

// Malformed input: wrong dimensions, incomplete tables, unparsable group strings.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numeric precondition failed. `measure` is the offending residual.
class ContractViolation : public std::runtime_error {
 public:
  ContractViolation(const std::string& what, double measure)
      : std::runtime_error(what), measure_(measure) {}
  double measure() const noexcept { return measure_; }

 private:
  double measure_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// The input is not a μ-cosine solution (or decomposes into something that is not).
class NotASolution : public std::runtime_error {
 public:
  NotASolution(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace mucos
