#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cloops {

enum class Err {
  Ragged,
  NotLatin,
  NoIdentity,
  NoTwoSidedInverse,
  NotASubloop,
  NotNormal,
  TooLarge,
  UnknownIdentity,
  NotAdditive,
  NotHomomorphism,
  OutOfRange,
  NotNormalized,
  CocycleViolation,
  QNotCLoop,
  QNotSteiner,
  DiagonalNonzero,
  NotCentral,
  NotNuclear,
  NotAbelian,
  NotCLoop,
  InvalidSection,
  InvalidSTS,
  BadOrder,
  InvariantViolation,
  Mismatch,
  ParseError,
};

/// Error with a machine-readable code and the offending element indices, if any.
class LoopError : public std::runtime_error {
public:
  LoopError(Err code, std::string msg, std::vector<int> witness = {})
      : std::runtime_error(std::move(msg)), code_(code), witness_(std::move(witness)) {}

  Err code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

private:
  Err code_;
  std::vector<int> witness_;
};

[[noreturn]] inline void fail(Err code, std::string msg, std::vector<int> witness = {}) {
  throw LoopError(code, std::move(msg), std::move(witness));
}

}  // namespace cloops
