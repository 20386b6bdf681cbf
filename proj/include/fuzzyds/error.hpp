#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzyds {

enum class ErrorKind {
  InvalidInput,
  DomainError,
  FrameMismatch,
  UnknownElement,
  EmptySet,
  NotCrisp,
  SubnormalFocal,
  NotConsonant,
  BadMass,
  LabelCollision,
  SubnormalGranule,
  TotalIncompatibility,
  EmptyIntersection,
  TotalConflict,
  TooLarge,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fuzzyds
