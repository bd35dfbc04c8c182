#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fintop/subset_mask.hpp"

namespace fintop {

enum class ErrorKind {
  MissingEmptyOrUniverse,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  UnknownLabel,
  DuplicateLabel,
  NoPoints,
  TooManyPoints,
  EmptyCarrier,
  EmptyWindow,
  UnknownId,
  InvalidNeighborhoods,
  Parse,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingEmptyOrUniverse: return "MissingEmptyOrUniverse";
    case ErrorKind::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorKind::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NoPoints: return "NoPoints";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::EmptyCarrier: return "EmptyCarrier";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::InvalidNeighborhoods: return "InvalidNeighborhoods";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Raised for every input or validation failure. All of these map to CLI exit code 2.
class TopologyError : public std::runtime_error {
public:
  TopologyError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}
  TopologyError(ErrorKind kind, const std::string& message, std::vector<SubsetMask> witness)
      : TopologyError(kind, message) {
    witness_ = std::move(witness);
  }

  ErrorKind kind() const { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const { return detail_; }
  /// Offending sets, when the failure has one (e.g. the pair whose union is missing).
  const std::vector<SubsetMask>& witness() const { return witness_; }

private:
  ErrorKind kind_;
  std::string detail_;
  std::vector<SubsetMask> witness_;
};

}  // namespace fintop
