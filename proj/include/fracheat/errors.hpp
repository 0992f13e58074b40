#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracheat {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularTime : std::domain_error {
  using std::domain_error::domain_error;
};

struct NegativeMoment : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Picard iteration gave up before reaching tolerance; carries the
/// per-iteration sup-norm residuals so callers can inspect the trace.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(const std::string& msg, std::vector<double> residuals)
      : std::runtime_error(msg), residual_trace(std::move(residuals)) {}

  std::vector<double> residual_trace;
};

}  // namespace fracheat
