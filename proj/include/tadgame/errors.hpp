#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tad {

// Base for every error the library raises. `module()` names the component
// that failed; `what()` carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string name, const std::string& message)
      : std::runtime_error(module + "::" + name + ": " + message),
        module_(std::move(module)),
        name_(std::move(name)) {}

  const std::string& module() const { return module_; }
  const std::string& name() const { return name_; }

 private:
  std::string module_;
  std::string name_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message, int line = 0)
      : Error("scenario", "ConfigError",
              line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A precondition on the initial states is violated (non-hovering input or a
// defender that starts inside a terminal set).
class InitialStateError : public Error {
 public:
  explicit InitialStateError(const std::string& message)
      : Error("winning", "InitialStateError", message) {}
};

// Failures tied to a specific true anomaly.
class AnomalyError : public Error {
 public:
  AnomalyError(std::string module, std::string name, double anomaly,
               double magnitude, const std::string& message)
      : Error(std::move(module), std::move(name),
              message + " at f = " + std::to_string(anomaly) + " rad"),
        anomaly_(anomaly),
        magnitude_(magnitude) {}

  double anomaly() const { return anomaly_; }
  // Condition estimate or entry magnitude that tripped the check.
  double magnitude() const { return magnitude_; }

 private:
  double anomaly_;
  double magnitude_;
};

class SingularFactor : public AnomalyError {
 public:
  SingularFactor(double anomaly, double condition)
      : AnomalyError("riccati", "SingularFactor", anomaly, condition,
                     "factor (U22 - S U12) is numerically singular (cond " +
                         std::to_string(condition) + ")") {}
};

class NumericalBlowup : public AnomalyError {
 public:
  NumericalBlowup(double anomaly, double magnitude)
      : AnomalyError("numerical_baseline", "NumericalBlowup", anomaly,
                     magnitude,
                     "integration diverged (|entry| = " +
                         std::to_string(magnitude) + ")") {}
};

class SingularBlock : public AnomalyError {
 public:
  SingularBlock(const std::string& block, double anomaly, double condition)
      : AnomalyError("winning", "SingularBlock", anomaly, condition,
                     block + " is not invertible (cond " +
                         std::to_string(condition) + ")") {}
};

}  // namespace tad
