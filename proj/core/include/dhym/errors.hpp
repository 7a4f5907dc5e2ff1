#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dhym {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The total phase left (0, pi); cot/shift algebra is undefined there.
struct PhaseOutOfRange : Error {
  using Error::Error;
};

/// A partial product in the incremental complex multiplication left the
/// representable safe range.
struct MagnitudeError : Error {
  using Error::Error;
};

/// An eigenvalue vector left the admissible cone; carries the offending
/// grid point and the margin observed there.
struct ConeExit : Error {
  std::size_t point = 0;
  double margin = 0.0;
  ConeExit(const std::string& what, std::size_t point_, double margin_)
      : Error(what), point(point_), margin(margin_) {}
};

struct ConeViolation : Error {
  using Error::Error;
};

struct NonPositiveMetric : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct LinearSolveFailure : Error {
  using Error::Error;
};

/// A Kaehler representative lost pointwise positivity during a solve.
struct PositivityExit : Error {
  using Error::Error;
};

/// Root bracketing failed in a scalar solve.
struct BracketFailure : Error {
  using Error::Error;
};

/// A decay-hypothesis check failed; carries the violating sample pair.
struct HypothesisFail : Error {
  std::size_t i = 0, j = 0;
  HypothesisFail(const std::string& what, std::size_t i_, std::size_t j_)
      : Error(what), i(i_), j(j_) {}
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace dhym
