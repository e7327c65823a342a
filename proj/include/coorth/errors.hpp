#pragma once

#include <stdexcept>
#include <string>

namespace coorth {

/// Malformed or out-of-range input (bad rational literal, dimension
/// mismatch, degenerate norm, epsilon outside [0,1), ...).
class InputError : public std::invalid_argument {
  public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration exceeded its configured pattern budget.  Callers that
/// can produce partial results report them alongside this condition
/// instead of throwing; the exception form is for hard entry points.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coorth
