#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hss {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A term or leaf does not fit the context an operation expects.
struct ScopeError : Error {
  using Error::Error;
};

// Leaf maps whose endpoints do not line up.
struct ContextMismatch : Error {
  using Error::Error;
};

struct GenerationError : Error {
  using Error::Error;
};

// A fold step returned a value outside its declared target.
struct StepContractError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t pos, const std::string& what)
      : Error("parse error at " + std::to_string(pos) + ": " + what), position(pos) {}
  std::size_t position;
};

}  // namespace hss
