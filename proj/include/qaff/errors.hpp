#pragma once

#include <stdexcept>
#include <string>

namespace qaff {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can separate mathematical/usage errors from bugs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QAFF_DEFINE_ERROR(Name)                                 \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(what) {}     \
  };

QAFF_DEFINE_ERROR(DivisionByZero)
QAFF_DEFINE_ERROR(NotPolynomial)
QAFF_DEFINE_ERROR(BadConstantTerm)
QAFF_DEFINE_ERROR(MixedSeries)
QAFF_DEFINE_ERROR(SpecializationPole)
QAFF_DEFINE_ERROR(LatticeOverflow)
QAFF_DEFINE_ERROR(ParseError)
QAFF_DEFINE_ERROR(UnsupportedRank)
QAFF_DEFINE_ERROR(IndexOutOfRange)
QAFF_DEFINE_ERROR(MissingGenerator)
QAFF_DEFINE_ERROR(WindowTooSmall)
QAFF_DEFINE_ERROR(NotEigenvector)
QAFF_DEFINE_ERROR(NoSolution)
QAFF_DEFINE_ERROR(MirrorMismatch)
QAFF_DEFINE_ERROR(TypeMismatch)
QAFF_DEFINE_ERROR(Unsupported)

#undef QAFF_DEFINE_ERROR

}  // namespace qaff
