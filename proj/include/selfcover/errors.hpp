#pragma once

#include <stdexcept>
#include <string>

namespace selfcover {

/// Invalid geometric input (non-convex polygon, point outside a container, ...).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a general-position requirement.
class DegeneracyError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A computed object failed its exact post-condition check.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational strings, JSON files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace selfcover
