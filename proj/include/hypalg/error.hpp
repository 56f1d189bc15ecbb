#pragma once

#include <stdexcept>
#include <string>

namespace hypalg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Gamma evaluated at a non-positive integer.
class PoleError : public Error {
public:
  using Error::Error;
};

/// Hypergeometric parameters outside the supported set (e.g. blocking
/// non-positive integer c).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Argument outside the supported domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its refinement budget.
class NonConvergence : public Error {
public:
  using Error::Error;
};

/// Ladder action requested for a series kind that has none here.
class UnsupportedSeries : public Error {
public:
  using Error::Error;
};

/// Index violates the weight/support constraints of its series or sector.
class IndexError : public Error {
public:
  using Error::Error;
};

/// Mixed integer/half-integer weights.
class ParityError : public Error {
public:
  using Error::Error;
};

/// Normalization constant left its admissible domain.
class NormalizationError : public Error {
public:
  using Error::Error;
};

/// Finite-difference stencil exits the coordinate domain.
class DifferentiationError : public Error {
public:
  using Error::Error;
};

/// Structure-table window cannot represent a product to tolerance.
class WindowTooSmall : public Error {
public:
  using Error::Error;
};

/// Bracket result leaves the active truncation window.
class WindowOverflow : public Error {
public:
  using Error::Error;
};

/// Transferred basis fails the square-integrable-product requirement.
class IntegrabilityError : public Error {
public:
  using Error::Error;
};

/// Cached table fails its checksum or compatibility check.
class CacheError : public Error {
public:
  using Error::Error;
};

}  // namespace hypalg
