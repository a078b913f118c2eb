#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfr {

enum class ErrorKind {
  EmptyCarrier,
  DuplicateElement,
  UnknownElement,
  NotAPoset,
  NoBottom,
  NoTop,
  NotALattice,
  NotDistributive,
  LimitExceeded,
  MixedParents,
  MixedCodomains,
  NotASublocale,
  NotDisjoint,
  NotInCbar,
  NotInC,
  NotHausdorff,
  NotExtContinuous,
  OutOfUnitRange,
  CodomainNotSublocaleFrame,
  NotMonotone,
  NotT0,
  NotATopology,
  NotInducedValued,
  GridTooLarge,
  NotDirected,
  NotSubfit,
  UnknownCheck,
  SchemaError,
};

inline const char* name_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyCarrier: return "EmptyCarrier";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::NoTop: return "NoTop";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::MixedParents: return "MixedParents";
    case ErrorKind::MixedCodomains: return "MixedCodomains";
    case ErrorKind::NotASublocale: return "NotASublocale";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotInCbar: return "NotInCbar";
    case ErrorKind::NotInC: return "NotInC";
    case ErrorKind::NotHausdorff: return "NotHausdorff";
    case ErrorKind::NotExtContinuous: return "NotExtContinuous";
    case ErrorKind::OutOfUnitRange: return "OutOfUnitRange";
    case ErrorKind::CodomainNotSublocaleFrame: return "CodomainNotSublocaleFrame";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotT0: return "NotT0";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::NotInducedValued: return "NotInducedValued";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::NotSubfit: return "NotSubfit";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

/// Structured failure: a law or contract name plus the elements that witness it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> witness = {})
      : std::runtime_error(std::string(name_of(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

}  // namespace pfr
