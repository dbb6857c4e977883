#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewgin {

enum class ErrorCode {
  NonPrimeModulus,
  NoRootOfUnity,
  FieldMismatch,
  QuiverMismatch,
  NotACycle,
  UnknownArrow,
  UnknownVertex,
  DegreeMismatch,
  NotLengthHomogeneous,
  NotAssociative,
  NoIdentity,
  NotLatinSquare,
  NotAbelian,
  BadCharacteristic,
  InvalidAction,
  NotInvariantPotential,
  EquivarianceFailure,
  NoSolution,
  IncompleteIdempotents,
  BasisExpressFailure,
  NotSymplectic,
  SizeGuard,
  ParseError,
  ValidationError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skewgin
