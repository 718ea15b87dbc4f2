#pragma once

#include <stdexcept>
#include <string>

namespace liebw {

/// Base of every error raised by the library. `kind()` is a stable identifier
/// that the CLI and the JSON reports use verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LIEBW_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

LIEBW_DEFINE_ERROR(ParseError);
LIEBW_DEFINE_ERROR(UnassignedParameter);
LIEBW_DEFINE_ERROR(DomainError);
LIEBW_DEFINE_ERROR(IndexOutOfRange);
LIEBW_DEFINE_ERROR(SymmetricEntry);
LIEBW_DEFINE_ERROR(DimensionMismatch);
LIEBW_DEFINE_ERROR(SingularMatrix);
LIEBW_DEFINE_ERROR(NotACobracket);
LIEBW_DEFINE_ERROR(ShapeError);
LIEBW_DEFINE_ERROR(NotInFirstFactor);
LIEBW_DEFINE_ERROR(BasisNotComplete);
LIEBW_DEFINE_ERROR(WrongDimension);
LIEBW_DEFINE_ERROR(NotClosed);
LIEBW_DEFINE_ERROR(BadPartition);
LIEBW_DEFINE_ERROR(WrongChart);
LIEBW_DEFINE_ERROR(OutOfChart);
LIEBW_DEFINE_ERROR(UnknownBracket);
LIEBW_DEFINE_ERROR(UnknownKey);
LIEBW_DEFINE_ERROR(VerdictMismatch);

#undef LIEBW_DEFINE_ERROR

}  // namespace liebw
