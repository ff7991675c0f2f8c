#pragma once

#include <stdexcept>
#include <string>

namespace coxinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COXINV_ERROR(Name)                                   \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& what) : Error(what) {}  \
  }

COXINV_ERROR(InvalidClassification);
COXINV_ERROR(ZeroVector);
COXINV_ERROR(SingularGram);
COXINV_ERROR(NotFinite);
COXINV_ERROR(NotReflections);
COXINV_ERROR(NotCrystallographic);
COXINV_ERROR(IndependenceFailure);
COXINV_ERROR(WeightNotInLattice);
COXINV_ERROR(InvolutionNotFound);
COXINV_ERROR(BadIndexTuple);
COXINV_ERROR(EnumerationCap);

#undef COXINV_ERROR

}  // namespace coxinv
