#pragma once

#include <stdexcept>
#include <string>

namespace subdivmg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUBDIVMG_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

SUBDIVMG_DEFINE_ERROR(InvalidOrder);
SUBDIVMG_DEFINE_ERROR(OrderTooLarge);
SUBDIVMG_DEFINE_ERROR(InvalidSymbol);
SUBDIVMG_DEFINE_ERROR(DimensionMismatch);
SUBDIVMG_DEFINE_ERROR(BadDimension);
SUBDIVMG_DEFINE_ERROR(IncompatibleDimension);
SUBDIVMG_DEFINE_ERROR(ZeroDiagonal);
SUBDIVMG_DEFINE_ERROR(SingularCoarseMatrix);
SUBDIVMG_DEFINE_ERROR(HypothesisViolated);
SUBDIVMG_DEFINE_ERROR(TooFewIterations);
SUBDIVMG_DEFINE_ERROR(IndexOutOfRange);
SUBDIVMG_DEFINE_ERROR(InvalidDegree);
SUBDIVMG_DEFINE_ERROR(ParseError);
SUBDIVMG_DEFINE_ERROR(InvalidParameter);

#undef SUBDIVMG_DEFINE_ERROR

}  // namespace subdivmg
