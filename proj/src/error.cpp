#include "fuzzyds/error.hpp"

#include <atomic>

#include "fuzzyds/tolerance.hpp"

namespace fuzzyds {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotCrisp: return "NotCrisp";
    case ErrorKind::SubnormalFocal: return "SubnormalFocal";
    case ErrorKind::NotConsonant: return "NotConsonant";
    case ErrorKind::BadMass: return "BadMass";
    case ErrorKind::LabelCollision: return "LabelCollision";
    case ErrorKind::SubnormalGranule: return "SubnormalGranule";
    case ErrorKind::TotalIncompatibility: return "TotalIncompatibility";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::TotalConflict: return "TotalConflict";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

namespace {
std::atomic<double> g_epsilon{kDefaultEpsilon};
}

double epsilon() noexcept { return g_epsilon.load(std::memory_order_relaxed); }

void set_epsilon(double eps) {
  if (!(eps > 0.0) || !(eps < 0.5)) {
    throw Error(ErrorKind::DomainError, "epsilon must lie in (0, 0.5)");
  }
  g_epsilon.store(eps, std::memory_order_relaxed);
}

}  // namespace fuzzyds
