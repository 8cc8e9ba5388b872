#pragma once

#include <stdexcept>
#include <string>

namespace ramcover {

// Every failure raised by the library derives from Error so callers can
// catch the whole family at once; the leaf types name the contract broken.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RAMCOVER_DEFINE_ERROR(Name)         \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

RAMCOVER_DEFINE_ERROR(InvalidInput);
RAMCOVER_DEFINE_ERROR(NotDivisible);
RAMCOVER_DEFINE_ERROR(DivisionByZero);
RAMCOVER_DEFINE_ERROR(ParseError);
RAMCOVER_DEFINE_ERROR(InvalidCurve);
RAMCOVER_DEFINE_ERROR(InvalidCover);
RAMCOVER_DEFINE_ERROR(UnsupportedShape);
RAMCOVER_DEFINE_ERROR(InvalidGenus);
RAMCOVER_DEFINE_ERROR(InvalidDegree);
RAMCOVER_DEFINE_ERROR(NotConnected);
RAMCOVER_DEFINE_ERROR(PipelineError);
RAMCOVER_DEFINE_ERROR(DeformationFailed);
RAMCOVER_DEFINE_ERROR(FirstOrderOnly);

#undef RAMCOVER_DEFINE_ERROR

}  // namespace ramcover
