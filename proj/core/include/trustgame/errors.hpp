#pragma once

#include <stdexcept>
#include <string>

namespace trustgame {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A direction vector is numerically zero, so a projection or a boundary
/// line cannot be formed from it.
class DegenerateDirection : public Error {
 public:
  using Error::Error;
};

/// The attacker's best response is requested at a fusion weight so close to
/// one that the response is unbounded.
class AlphaSaturated : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling failed to produce an admissible draw within the
/// attempt budget.
class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

/// The game instance has no usable interior structure (the sensor estimate
/// coincides with the attacker's model of it), so the interior fixed-point
/// analysis is undefined.
class DegenerateGame : public Error {
 public:
  using Error::Error;
};

/// An argument violated a documented precondition.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Two parameter sets that must agree (for a reduced-form evaluation) do
/// not.
class ParamsMismatch : public Error {
 public:
  using Error::Error;
};

/// A configuration file or document could not be parsed or validated.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace trustgame
