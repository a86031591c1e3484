#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace omegaext {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates the invariants of its type, or an operation was called
/// outside its precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A word or automaton uses letters outside the alphabet it is combined with.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but outside the presentations an operation
/// supports (for example a block word fed to a UP-only oracle).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// Erasing neutral letters left a finite word where an ω-word was needed.
class NotAnOmegaWord : public UnsupportedInput {
 public:
  using UnsupportedInput::UnsupportedInput;
};

/// A construction hit its configured size or step cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string budget, std::size_t limit)
      : Error(budget + " budget exceeded (limit " + std::to_string(limit) + ")"),
        budget_(std::move(budget)),
        limit_(limit) {}

  const std::string& budget() const noexcept { return budget_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string budget_;
  std::size_t limit_;
};

/// Malformed text input (words, automata, formulas, classifiers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Counts work units of a long-running search and throws `BudgetExceeded`
/// once the limit is crossed.  Not thread safe; one budget per search.
class StepBudget {
 public:
  /// Name of the environment variable that overrides the default limit.
  static constexpr const char* kEnvVar = "OMEGAEXT_STEP_BUDGET";
  static constexpr std::size_t kDefaultLimit = 2'000'000'000;

  explicit StepBudget(std::size_t limit = default_limit()) : limit_(limit) {}

  void charge(std::size_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) throw BudgetExceeded("step", limit_);
  }

  std::size_t used() const noexcept { return used_; }
  std::size_t limit() const noexcept { return limit_; }

  /// `kDefaultLimit`, or the value of `OMEGAEXT_STEP_BUDGET` when set.
  static std::size_t default_limit();

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

}  // namespace omegaext
