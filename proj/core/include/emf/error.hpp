#pragma once

#include <stdexcept>
#include <string>

namespace emf {

/// Thrown when an input file or expression is malformed.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when instance data violates a validated invariant
/// (non-invariant potential, AB != f*I, non-isolated singularity, ...).
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a computation cannot produce a certified answer
/// (oracle non-stabilization, sign-certification precision exhausted).
struct computation_error : std::runtime_error {
  explicit computation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace emf
