#pragma once

#include <stdexcept>
#include <string>

namespace fj {

// Error categories map 1:1 onto CLI exit codes (see tools/fj_main.cpp).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

// Internal invariant violations (plan/scheme mismatches the compiler should
// have made impossible). Never expected on validated plans.
struct EngineError : Error {
  using Error::Error;
};

}  // namespace fj
