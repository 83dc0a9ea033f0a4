#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hh {

enum class ErrorKind {
  EndpointMismatch,
  NotAcyclic,
  InvalidQuiver,
  NonParallelRelation,
  RelationTooShort,
  ZeroModule,
  GlobalDimensionTooHigh,
  NotHereditary,
  DimensionCapExceeded,
  InvalidWeights,
  DuplicatePoints,
  ZeroPoint,
  NonIntegerGenus,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::InvalidQuiver: return "InvalidQuiver";
    case ErrorKind::NonParallelRelation: return "NonParallelRelation";
    case ErrorKind::RelationTooShort: return "RelationTooShort";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::GlobalDimensionTooHigh: return "GlobalDimensionTooHigh";
    case ErrorKind::NotHereditary: return "NotHereditary";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type;
/// `kind()` lets callers (and the CLI exit-code mapping) dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hh
