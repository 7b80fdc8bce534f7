#pragma once

#include <stdexcept>
#include <string>

namespace kperm {

/// An argument violated a documented precondition (size, range, cap).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured effort budget (factorization, search) ran out.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kperm
