#pragma once

#include <stdexcept>
#include <string>

namespace ks {

/// Bad input: rejected parameters, malformed polynomials, misuse of an API.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A tractability guard was hit; the message suggests the cheaper route.
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// Elements from different parameter contexts were combined.
struct ContextMismatch : ValidationError {
  explicit ContextMismatch(const std::string& msg) : ValidationError(msg) {}
};

}  // namespace ks
