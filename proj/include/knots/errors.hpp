#pragma once

#include <stdexcept>
#include <string>

namespace knots {

/// Parameter triple violates a validity invariant; message names the constraint.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Two crossings share the same exact parameter and overlapping strand supports.
struct DegenerateConfiguration : std::runtime_error {
  explicit DegenerateConfiguration(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical crossing scan disagrees with the exact enumeration.
struct OracleMismatch : std::runtime_error {
  explicit OracleMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct StrandCapExceeded : std::runtime_error {
  explicit StrandCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct CrossingCapExceeded : std::runtime_error {
  explicit CrossingCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct LinkNotKnot : std::runtime_error {
  explicit LinkNotKnot(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownFixture : std::runtime_error {
  explicit UnknownFixture(const std::string& what) : std::runtime_error(what) {}
};

struct NotPeriodicParams : std::runtime_error {
  explicit NotPeriodicParams(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knots
