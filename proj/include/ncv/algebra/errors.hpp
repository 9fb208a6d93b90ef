#pragma once

#include <stdexcept>
#include <string>

namespace ncv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NCV_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

NCV_DEFINE_ERROR(DivisionNotExact);
NCV_DEFINE_ERROR(ZeroDivisor);
NCV_DEFINE_ERROR(LogOfNonUnit);
NCV_DEFINE_ERROR(ExpOfNonzeroConstant);
NCV_DEFINE_ERROR(InverseOfNonUnit);
NCV_DEFINE_ERROR(OddPowersRemain);
NCV_DEFINE_ERROR(BoundExceeded);
NCV_DEFINE_ERROR(CutoffExceeded);
NCV_DEFINE_ERROR(BasisMismatch);
NCV_DEFINE_ERROR(RangeError);
NCV_DEFINE_ERROR(IntegralityViolation);
NCV_DEFINE_ERROR(BudgetExceeded);
NCV_DEFINE_ERROR(NotClassConstant);
NCV_DEFINE_ERROR(ParseError);
NCV_DEFINE_ERROR(TooManyVariables);

#undef NCV_DEFINE_ERROR

}  // namespace ncv
