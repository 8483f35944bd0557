#pragma once

#include <stdexcept>
#include <string>

namespace cfineq {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bound evaluates beyond the representable range and is vacuous.
class OverflowError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Input on which the expression degenerates (e.g. a singular inner term).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPositiveDefinite : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two operators are not comparable in the Loewner order.
class OrderingIndeterminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cfineq
