#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liegauge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct DimensionError : Error {
  using Error::Error;
};

struct NotInvertibleError : Error {
  using Error::Error;
};

// Raised when a tensor term breaks the index rules (a summed id not appearing
// exactly twice, a factor contracting its own derivative with its own vector
// index, and the like).
struct MalformedTermError : Error {
  using Error::Error;
};

}  // namespace liegauge
