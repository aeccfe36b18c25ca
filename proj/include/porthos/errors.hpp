#pragma once

#include <stdexcept>
#include <string>

namespace porthos {

// An enumeration guard or size precondition was exceeded.
struct size_error : std::runtime_error {
  explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed (eigensolver non-convergence, ...).
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace porthos
