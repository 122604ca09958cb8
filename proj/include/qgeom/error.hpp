// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qgeom {

enum class ErrorCode {
  InvalidArgument,
  ZeroState,
  UnsupportedQubits,
  RankMismatch,
  VarianceMismatch,
  NotProduct,
  NotSymmetric,
  HasSymmetricPart,
  OffLine,
  DegenerateLine,
  LineOnQuadric,
  CoincidentPoints,
  SingularOperator,
  NumericalBreakdown,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code so the
// C API can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qgeom
