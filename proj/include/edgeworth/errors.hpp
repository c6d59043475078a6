#pragma once

#include <stdexcept>
#include <string>

namespace edgeworth {

// Caller passed arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure failed (non-convergence, non-finite values).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The statistic has a non-positive leading variance.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Moment or cumulant requested beyond the supported order.
class UnsupportedOrderError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A moment table lacks an entry that an operation needs.
class IncompleteTableError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace edgeworth
