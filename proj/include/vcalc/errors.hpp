#pragma once

#include <stdexcept>
#include <string>

namespace vcalc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define VCALC_DEFINE_ERROR(Name) \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  }

VCALC_DEFINE_ERROR(DivisionByZero);
VCALC_DEFINE_ERROR(EvaluationPole);
VCALC_DEFINE_ERROR(ParseError);
VCALC_DEFINE_ERROR(UnknownBracket);
VCALC_DEFINE_ERROR(ConfigError);
VCALC_DEFINE_ERROR(FormulaError);
VCALC_DEFINE_ERROR(ConstructionInconsistent);
VCALC_DEFINE_ERROR(GradingError);
VCALC_DEFINE_ERROR(CentralizerError);
VCALC_DEFINE_ERROR(NormalizationError);
VCALC_DEFINE_ERROR(UnsupportedChargePair);
VCALC_DEFINE_ERROR(CutoffTooSmall);
VCALC_DEFINE_ERROR(UsageError);

#undef VCALC_DEFINE_ERROR

}  // namespace vcalc
