#pragma once

#include <stdexcept>
#include <string>

namespace wph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad weights, parameters outside a family's range).
struct InvalidInput : Error {
  using Error::Error;
};

struct NotWellFormed : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A stratum whose gcd is 1 carries no quotient singularity.
struct NoSingularity : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A computation would exceed a configured size limit.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct EmptyResult : Error {
  using Error::Error;
};

}  // namespace wph
