#pragma once

#include <stdexcept>
#include <string>

namespace patwilf {

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& m) : std::runtime_error(m) {}
};

struct InputError : std::runtime_error {
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

struct SeriesError : std::runtime_error {
  explicit SeriesError(const std::string& m) : std::runtime_error(m) {}
};

// Expression-text syntax problem; pos is a 0-based byte offset into the input.
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t pos_, const std::string& m)
      : std::runtime_error(m + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

struct NotFoundError : std::runtime_error {
  explicit NotFoundError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace patwilf
