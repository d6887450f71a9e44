#pragma once

#include <stdexcept>
#include <string>

namespace degen {

// Base of every error this library throws. Catch this to handle all of them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DEGEN_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

DEGEN_DEFINE_ERROR(DivisionByZero);
DEGEN_DEFINE_ERROR(NonUnitConstantTerm);
DEGEN_DEFINE_ERROR(IndexError);
DEGEN_DEFINE_ERROR(InsufficientTable);
DEGEN_DEFINE_ERROR(DegenerateParameter);
DEGEN_DEFINE_ERROR(TruncationTooShort);
DEGEN_DEFINE_ERROR(TooLarge);
DEGEN_DEFINE_ERROR(BadLength);
DEGEN_DEFINE_ERROR(BadParameter);
DEGEN_DEFINE_ERROR(UnknownIdentity);
DEGEN_DEFINE_ERROR(ParseError);

#undef DEGEN_DEFINE_ERROR

}  // namespace degen
