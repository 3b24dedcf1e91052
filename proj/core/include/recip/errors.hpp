#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recip {

enum class ErrorKind {
  InvalidInput,
  NotPointed,
  NotFullDimensional,
  BadGrading,
  WitnessSearchExhausted,
  FaceNotPresent,
  DimensionTooHigh,
  NotAManifold,
  DegeneratePoint,
  SubcomplexTouchesAvoidedFacet,
  ArrangementDoesNotCover,
  Overflow,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::BadGrading: return "BadGrading";
    case ErrorKind::WitnessSearchExhausted: return "WitnessSearchExhausted";
    case ErrorKind::FaceNotPresent: return "FaceNotPresent";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::NotAManifold: return "NotAManifold";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::SubcomplexTouchesAvoidedFacet: return "SubcomplexTouchesAvoidedFacet";
    case ErrorKind::ArrangementDoesNotCover: return "ArrangementDoesNotCover";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every kernel failure surfaces as this exception; `kind()` is stable and
/// meant for callers (the CLI maps it to exit code 2).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace recip
