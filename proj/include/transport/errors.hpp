#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transport {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value grammar violation; position is a 0-based byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

struct CarrierMismatch : Error {
  using Error::Error;
};

struct WiringError : Error {
  using Error::Error;
};

// A function space or relator materialization exceeded the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct NotFound : Error {
  using Error::Error;
};

}  // namespace transport
