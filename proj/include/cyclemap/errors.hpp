#pragma once

#include <stdexcept>
#include <string>

namespace cyclemap {

// A caller-supplied value violates a documented invariant.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Stored data (a catalog file, a memo) contradicts the map dynamics.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclemap
