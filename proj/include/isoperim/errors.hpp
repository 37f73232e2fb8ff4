#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isop {

// Caller violated an API contract (dimension mismatch, malformed input).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A formula was requested where its hypotheses do not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computation reproducing a machine-checked proof step did not come out as claimed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::int64_t sets_explored, std::int64_t best_lower_bound)
      : std::runtime_error(what), sets_explored_(sets_explored), best_lower_bound_(best_lower_bound) {}

  std::int64_t sets_explored() const noexcept { return sets_explored_; }
  // -1 when no complete set was reached before the budget ran out.
  std::int64_t best_lower_bound() const noexcept { return best_lower_bound_; }

 private:
  std::int64_t sets_explored_;
  std::int64_t best_lower_bound_;
};

}  // namespace isop
