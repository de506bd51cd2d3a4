#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbicoh {

enum class ErrorKind {
  CompositionNonzero,
  NotPrime,
  RankMismatch,
  NotUnimodular,
  BoundExceeded,
  OutOfRange,
  GroupMismatch,
  NotCyclic,
  NotDirectProduct,
  SizeGuardExceeded,
  NotInCatalog,
  Inconsistent,
  OrderConditionFailed,
  NotHomomorphism,
  UncertifiedAction,
  HypothesisUnverified,
  UnsupportedModel,
  Malformed,
  DimensionMismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orbicoh
