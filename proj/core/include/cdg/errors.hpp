#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed group spec or edge-list text. position is a byte offset (or a
// line number for edge-list files, see graph_io.hpp).
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// A numeric parameter or size limit is outside its documented range.
class OutOfRange : public Error {
public:
  using Error::Error;
};

// Enumeration would exceed the configured element cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

// The operation needs data the group description does not carry, e.g.
// element multiplicities of a support-only spectrum.
class Unsupported : public Error {
public:
  using Error::Error;
};

// A graph operation received inconsistent input (unknown label, label
// collision, orientation not covering the edge set, ...).
class GraphError : public Error {
public:
  using Error::Error;
};

}  // namespace cdg
