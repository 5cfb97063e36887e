#pragma once

#include <stdexcept>
#include <string>

namespace opalg {

struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error
{
  using Error::Error;
};

struct ArithmeticError : Error
{
  using Error::Error;
};

/// An operation was invoked on an input that does not satisfy its
/// documented precondition (e.g. the reduced derived triple on a non-mYB
/// operator).
struct PreconditionViolation : Error
{
  using Error::Error;
};

/// Refusal to run an exhaustive check above the desk-scale dimension limits.
struct GuardExceeded : Error
{
  using Error::Error;
};

struct ParseError : Error
{
  using Error::Error;
};

void require_same_dim(std::size_t a, std::size_t b, const char* what);

} // namespace opalg
