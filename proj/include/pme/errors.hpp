#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pme {

// An input failed the PME/unitarity verification an operation requires.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, double deviation)
      : std::runtime_error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_ = 0.0;
};

// A QSS recovery window the access structure does not authorize.
class AuthorizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A 4-qubit state outside the canonical gauge required by the classifier.
class GaugeError : public std::invalid_argument {
 public:
  GaugeError(const std::string& what, std::string coefficient)
      : std::invalid_argument(what), coefficient_(std::move(coefficient)) {}
  const std::string& coefficient() const { return coefficient_; }

 private:
  std::string coefficient_;
};

// A request that would exceed the dense-representation guards.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pme
