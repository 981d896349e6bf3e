#pragma once

#include <stdexcept>
#include <string>

namespace cutdom {

/// Input exceeds a hard size bound of the exhaustive algorithms.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Double description exceeded its intermediate-ray budget.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::size_t budget, std::size_t reached)
        : std::runtime_error("double description exceeded ray budget " + std::to_string(budget) + " (reached " +
                             std::to_string(reached) + ")"),
          budget_(budget), reached_(reached)
    {
    }
    std::size_t budget() const { return budget_; }
    std::size_t reached() const { return reached_; }

private:
    std::size_t budget_;
    std::size_t reached_;
};

/// A result failed its own post-condition check. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cutdom
