#pragma once

#include <stdexcept>
#include <string>

namespace cfo {

/// Raised when run or sweep parameters are inconsistent (bad grid, missing
/// noise source, probes-per-axis too small, ...).
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a caller breaks a documented precondition, e.g. passes a point
/// whose dimension does not match the benchmark.
class ContractViolation : public std::logic_error {
public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace cfo
