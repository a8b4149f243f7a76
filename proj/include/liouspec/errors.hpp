#pragma once

#include <stdexcept>
#include <string>

namespace liouspec {

/// Invalid physical parameter or malformed configuration (CLI exit code 1).
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested sector lies outside the truncated space.
class EmptySectorError : public ParameterError {
public:
  explicit EmptySectorError(const std::string& what) : ParameterError(what) {}
};

/// Fock-cutoff too small: probability weight reached the truncation
/// boundary (CLI exit code 2). Carries the offending tail weight.
class TruncationError : public std::runtime_error {
public:
  TruncationError(const std::string& what, double tail)
      : std::runtime_error(what), tail_weight(tail) {}
  double tail_weight;
};

/// Scale guard tripped (e.g. full-superoperator oracle above its cutoff cap).
class GuardError : public std::runtime_error {
public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense eigensolver failed to converge or produced unacceptable residuals.
class EigensolverError : public std::runtime_error {
public:
  explicit EigensolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Time propagation produced a non-finite state.
class PropagationError : public std::runtime_error {
public:
  explicit PropagationError(const std::string& what) : std::runtime_error(what) {}
};

/// Too few zero crossings to estimate an oscillation frequency.
class FrequencyError : public std::runtime_error {
public:
  explicit FrequencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liouspec
