#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eigencone {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Schubert-index move (raise/lower) whose precondition fails.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

// Input outside the domain of an operation (non-dominant point, bad facet,
// zero ray, point off the face, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Raised when an enumeration would exceed the configured candidate budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
      : Error("enumeration estimate " + std::to_string(estimate) +
              " candidate tuples exceeds budget " + std::to_string(budget)),
        estimate_(estimate),
        budget_(budget) {}

  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

}  // namespace eigencone
