// SPDX-License-Identifier: Apache-2.0
#include "qgeom/spinor.hpp"

namespace qgeom {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::ZeroState: return "zero state";
    case ErrorCode::UnsupportedQubits: return "unsupported qubit count";
    case ErrorCode::RankMismatch: return "rank mismatch";
    case ErrorCode::VarianceMismatch: return "variance mismatch";
    case ErrorCode::NotProduct: return "not a product state";
    case ErrorCode::NotSymmetric: return "not a symmetric state";
    case ErrorCode::HasSymmetricPart: return "state has a symmetric part";
    case ErrorCode::OffLine: return "state is off the line";
    case ErrorCode::DegenerateLine: return "degenerate line";
    case ErrorCode::LineOnQuadric: return "line lies on the quadric";
    case ErrorCode::CoincidentPoints: return "coincident points";
    case ErrorCode::SingularOperator: return "singular operator";
    case ErrorCode::NumericalBreakdown: return "numerical breakdown";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

Spinor1 conjugate_state(const Spinor1& s) {
  if (s.is_zero())
    throw Error(ErrorCode::ZeroState, "conjugate of the zero spinor");
  return Spinor1{-std::conj(s[1]), std::conj(s[0])};
}

}  // namespace qgeom
