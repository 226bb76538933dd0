#pragma once

#include <stdexcept>
#include <string>

namespace arrangio {

// Every domain error carries a category that the CLI maps to its exit codes:
// bad_input -> 2, hypothesis_not_met -> 3, check_failed -> 4.
enum class ErrorCategory { bad_input, hypothesis_not_met, check_failed };

class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what, ErrorCategory cat)
      : std::runtime_error(name + ": " + what),
        name_(std::move(name)),
        category_(cat) {}
  const std::string& name() const { return name_; }
  ErrorCategory category() const { return category_; }

 private:
  std::string name_;
  ErrorCategory category_;
};

#define ARRANGIO_DEFINE_ERROR(NAME, CATEGORY)                      \
  class NAME : public Error {                                      \
   public:                                                         \
    explicit NAME(const std::string& what)                         \
        : Error(#NAME, what, ErrorCategory::CATEGORY) {}           \
  }

ARRANGIO_DEFINE_ERROR(SpecMismatch, bad_input);
ARRANGIO_DEFINE_ERROR(DivisionByZero, bad_input);
ARRANGIO_DEFINE_ERROR(NonInvertibleDenominator, bad_input);
ARRANGIO_DEFINE_ERROR(NotPrime, bad_input);
ARRANGIO_DEFINE_ERROR(IdenticalLines, bad_input);
ARRANGIO_DEFINE_ERROR(IdenticalPoints, bad_input);
ARRANGIO_DEFINE_ERROR(DuplicateLines, bad_input);
ARRANGIO_DEFINE_ERROR(ZeroTriple, bad_input);
ARRANGIO_DEFINE_ERROR(EmptyArrangement, bad_input);
ARRANGIO_DEFINE_ERROR(TooFewLines, bad_input);
ARRANGIO_DEFINE_ERROR(TooFewPoints, bad_input);
ARRANGIO_DEFINE_ERROR(ParameterOutOfRange, bad_input);
ARRANGIO_DEFINE_ERROR(InvalidConfig, bad_input);
ARRANGIO_DEFINE_ERROR(DependentForms, bad_input);
ARRANGIO_DEFINE_ERROR(BadInputFile, bad_input);
ARRANGIO_DEFINE_ERROR(NotFullRank, hypothesis_not_met);
ARRANGIO_DEFINE_ERROR(NotModular, hypothesis_not_met);
ARRANGIO_DEFINE_ERROR(NotSupersolvable, hypothesis_not_met);
ARRANGIO_DEFINE_ERROR(MultiplicityTooSmall, hypothesis_not_met);
ARRANGIO_DEFINE_ERROR(AllCollinear, hypothesis_not_met);
ARRANGIO_DEFINE_ERROR(HypothesisNotMet, hypothesis_not_met);
ARRANGIO_DEFINE_ERROR(CheckFailed, check_failed);

#undef ARRANGIO_DEFINE_ERROR

}  // namespace arrangio
