#pragma once

#include <stdexcept>
#include <string>

namespace toricres {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad fan data, wrong vector lengths, unsupported sizes,
// non-ample degrees, monomials outside the expected basis, parse failures.
struct ValidationError : Error {
  using Error::Error;
};

struct DimensionError : ValidationError {
  using ValidationError::ValidationError;
};

// The chosen coefficient specialization is too special: a rank drops, a
// required minor vanishes, a root is not simple.  Callers may retry with a
// fresh specialization.
struct DegenerateError : Error {
  using Error::Error;
};

}  // namespace toricres
