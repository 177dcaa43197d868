#pragma once

#include <stdexcept>
#include <string>

namespace resurgence {

// Error taxonomy matches the CLI exit-code contract:
//   parse -> 2, mathematical consistency -> 3, resource cap -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct UndefinedValueError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Deterministic refusal when an enumeration or materialization would exceed
// the configured caps.
struct ResourceError : Error {
  using Error::Error;
};

// A mathematically impossible outcome (failed re-verification, violated
// theorem). Always a bug in the library or its inputs, never swallowed.
struct ConsistencyError : Error {
  using Error::Error;
};

struct CharacteristicError : Error {
  using Error::Error;
};

struct UnsupportedDimensionError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct SeedError : Error {
  using Error::Error;
};

}  // namespace resurgence
