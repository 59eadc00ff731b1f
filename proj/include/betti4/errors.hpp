#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betti4 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define BETTI4_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    using Error::Error;                                             \
    const char* kind() const noexcept override { return #Name; }    \
  }

/// The 2^q subset walk was refused because #G is above the configured cap.
BETTI4_DEFINE_ERROR(GeneratorCapExceeded);
/// A generator handed to the twin construction does not divide the multidegree.
BETTI4_DEFINE_ERROR(RestrictionViolation);
/// A twin ideal in which some variable occurs with two different nonzero
/// exponents (or with an exponent other than the multidegree's).
BETTI4_DEFINE_ERROR(IllFormedTwin);
/// Squarefree ideal with no matching atlas class. Indicates corrupted atlas data.
BETTI4_DEFINE_ERROR(NotInAtlas);
BETTI4_DEFINE_ERROR(NegativeBetti);
/// Two independent Betti computations disagreed.
BETTI4_DEFINE_ERROR(InternalInconsistency);
BETTI4_DEFINE_ERROR(VariableOutOfRange);
BETTI4_DEFINE_ERROR(ExponentCapExceeded);

#undef BETTI4_DEFINE_ERROR

/// Malformed ideal text. `position` is the 0-based byte offset in the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : Error("parse error at column " + std::to_string(position + 1) + ": " + reason),
        position_(position),
        reason_(reason) {}

  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

}  // namespace betti4
