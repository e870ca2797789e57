#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catnorm {

enum class ErrorKind {
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotHomomorphism,
  NotSubgroup,
  NotNormal,
  AmbientMismatch,
  CodomainMismatch,
  NotSplit,
  NotMorphism,
  NotSurjective,
  NotCartesianInput,
  NoFactorization,
  NotReflexive,
  NotCommuting,
  FactorizationMissing,
  NotStable,
  NotMonoidAction,
  NotTopology,
  NotTopologicalGroup,
  ConditionBFails,
  InvariantViolation,
  ParseError,
  UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Internal consistency checks that must never fire on valid input.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace catnorm
