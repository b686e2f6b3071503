#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holo {

/// A requested size exceeds what a routine supports (dense oracle width,
/// brute-force enumeration size, bit-vector length).
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. line() is 1-based; 0 means the error is not tied to a line.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace holo
