#pragma once

#include <stdexcept>
#include <string>

namespace nashkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ChartError : Error { using Error::Error; };
struct SeriesError : Error { using Error::Error; };
struct CountLimitExceeded : Error { using Error::Error; };
struct StartSystemError : Error { using Error::Error; };
struct SolveError : Error { using Error::Error; };

// Raised when two independent computations that must agree do not.
struct InternalInvariantViolation : Error { using Error::Error; };

}  // namespace nashkit
