#ifndef HIGGSMOT_ERRORS_HPP
#define HIGGSMOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace higgsmot {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HIGGSMOT_DECLARE_ERROR(Name)      \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

HIGGSMOT_DECLARE_ERROR(ZeroDenominator)
HIGGSMOT_DECLARE_ERROR(PoleAtSubstitution)
HIGGSMOT_DECLARE_ERROR(NegativeGenus)
HIGGSMOT_DECLARE_ERROR(PoleAtArgument)
HIGGSMOT_DECLARE_ERROR(NonzeroConstantTerm)
HIGGSMOT_DECLARE_ERROR(ConstantTermNotOne)
HIGGSMOT_DECLARE_ERROR(KeyOffRay)
HIGGSMOT_DECLARE_ERROR(BoxOutsideDiagram)
HIGGSMOT_DECLARE_ERROR(NonInvertibleQAtZero)
HIGGSMOT_DECLARE_ERROR(HigherOrderPole)
HIGGSMOT_DECLARE_ERROR(InsufficientTruncation)
HIGGSMOT_DECLARE_ERROR(StabilizationFailure)
HIGGSMOT_DECLARE_ERROR(NonConstantExponent)
HIGGSMOT_DECLARE_ERROR(InvalidArgument)

#undef HIGGSMOT_DECLARE_ERROR

}  // namespace higgsmot

#endif  // HIGGSMOT_ERRORS_HPP
