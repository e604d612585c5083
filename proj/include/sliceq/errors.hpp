#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sliceq {

// Base of every domain error raised by the library. `kind()` is the stable
// identifier used in JSON error objects emitted by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SLICEQ_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

SLICEQ_DEFINE_ERROR(DivisionByZero);
SLICEQ_DEFINE_ERROR(NonFinite);
SLICEQ_DEFINE_ERROR(RealPointAmbiguous);
SLICEQ_DEFINE_ERROR(NotUnitImaginary);
SLICEQ_DEFINE_ERROR(UnsupportedRegionKind);
SLICEQ_DEFINE_ERROR(SymmetrizationNotReal);
SLICEQ_DEFINE_ERROR(NoConvergence);
SLICEQ_DEFINE_ERROR(ZeroDenominator);
SLICEQ_DEFINE_ERROR(PoleEvaluation);
SLICEQ_DEFINE_ERROR(UnknownIdentity);
SLICEQ_DEFINE_ERROR(NotPolynomial);
SLICEQ_DEFINE_ERROR(InvalidArgument);

#undef SLICEQ_DEFINE_ERROR

class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& detail, double max_remainder)
      : Error("NotDivisible", detail), max_remainder_(max_remainder) {}
  double max_remainder() const noexcept { return max_remainder_; }

 private:
  double max_remainder_;
};

// Parse failure in the quaternion text form or the expression language.
// `offset` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error("SyntaxError", message + " at offset " + std::to_string(offset)),
        offset_(offset),
        message_(message) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

}  // namespace sliceq
