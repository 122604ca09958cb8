// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "qgeom/qubit_three.hpp"

namespace qgeom {

inline constexpr double kDetDriftTol = 1e-9;

struct OrbitReport {
  SloccLabel label = SloccLabel::Separable;
  int trials = 0;
  int preserved = 0;
  double det_reference = 0.0;       // |Det(psi)|
  double max_det_drift = 0.0;       // max |Det(g psi) - Det(psi)| / |Det(psi)|, g in SL^3
  double max_tau_transformed = 0.0; // max three-tangle over all transformed states
  bool det_invariant = true;

  bool passed() const { return preserved == trials && det_invariant; }
};

// For each trial: one random invertible local operation (class must be
// preserved) and one det-normalized one (Det must be preserved, to
// kDetDriftTol relative, or stay zero for tau-zero classes).
OrbitReport orbit_check(const Spinor3& psi, int trials, std::uint64_t seed);

}  // namespace qgeom
