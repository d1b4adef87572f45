#pragma once

#include <stdexcept>
#include <string>

namespace coulomb2d {

/// Input outside the validity domain of an operation (bad energy, coupling
/// too strong, pole of a special function, malformed grid, ...).
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical method failed to reach its accuracy contract; the message
/// reports the achieved error where known.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coulomb2d
