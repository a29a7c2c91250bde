#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3iso {

enum class ErrorKind {
  NotInLattice,
  Degenerate,
  OriginNotInterior,
  NotReflexive,
  NotLattice,
  NotWellPosed,
  WrongDegree,
  Parse,
  InconsistentColumns,
  RankDeficientColumns,
  NotUnimodular,
  NotContained,
  Dataset,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI,
/// the row verifier) can map it to an exit code or a report entry.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace k3iso
