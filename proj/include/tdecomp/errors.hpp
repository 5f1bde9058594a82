#ifndef TDECOMP_ERRORS_HPP
#define TDECOMP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tdecomp {

// Bad caller input: out-of-range vertex ids, malformed files, impossible
// parameter combinations.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A documented precondition of an operation was violated (e.g. asking for the
// maximal cliques of a non-chordal graph).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::logic_error(what) {}
};

// An internal invariant failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Parse failure with a 1-based line number.
class ParseError : public InvalidInputError {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInputError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Thrown when an enumeration exceeds its item-count or wall-time budget.
// Carries whatever was produced so far so feasibility studies can still use
// the partial answer.
class BudgetExceededError : public std::runtime_error {
 public:
  enum class Stage { MinimalSeparators, PotentialMaximalCliques };

  BudgetExceededError(Stage stage, std::vector<std::vector<int>> partial,
                      const std::string& what)
      : std::runtime_error(what), stage_(stage), partial_(std::move(partial)) {}

  Stage stage() const { return stage_; }
  // Canonical vertex sets produced before the budget ran out.
  const std::vector<std::vector<int>>& partial() const { return partial_; }

 private:
  Stage stage_;
  std::vector<std::vector<int>> partial_;
};

}  // namespace tdecomp

#endif  // TDECOMP_ERRORS_HPP
