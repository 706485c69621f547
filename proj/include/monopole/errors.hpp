#pragma once

#include <stdexcept>
#include <string>

namespace monopole {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MONOPOLE_DEFINE_ERROR(Name)       \
  class Name : public Error {             \
   public:                                \
    explicit Name(const std::string& what) \
        : Error(#Name ": " + what) {}     \
  }

MONOPOLE_DEFINE_ERROR(DivisionByZero);
MONOPOLE_DEFINE_ERROR(ClosureOverflow);
MONOPOLE_DEFINE_ERROR(NoneFound);
MONOPOLE_DEFINE_ERROR(DegenerateCombination);
MONOPOLE_DEFINE_ERROR(NonIntegerMultiplicity);
MONOPOLE_DEFINE_ERROR(NonConstantModulus);
MONOPOLE_DEFINE_ERROR(DegenerateSum);
MONOPOLE_DEFINE_ERROR(NotIsomorphic);
MONOPOLE_DEFINE_ERROR(NotACycle);
MONOPOLE_DEFINE_ERROR(NonIntegerChern);
MONOPOLE_DEFINE_ERROR(NotHermitian);
MONOPOLE_DEFINE_ERROR(AmbiguousClustering);
MONOPOLE_DEFINE_ERROR(Mismatch);
MONOPOLE_DEFINE_ERROR(CatalogInconsistent);
MONOPOLE_DEFINE_ERROR(CertificateFailed);
MONOPOLE_DEFINE_ERROR(OutOfRange);
MONOPOLE_DEFINE_ERROR(IoError);

#undef MONOPOLE_DEFINE_ERROR

}  // namespace monopole
