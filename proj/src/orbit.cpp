// SPDX-License-Identifier: Apache-2.0
#include "qgeom/orbit.hpp"

#include <random>

namespace qgeom {

OrbitReport orbit_check(const Spinor3& psi, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (psi.is_zero()) throw Error(ErrorCode::ZeroState, "orbit of the zero state");
  const Spinor3 unit = psi.normalized();
  const SloccClass base = slocc_classify(unit);
  const Complex det = hyperdeterminant(unit);

  OrbitReport r;
  r.label = base.label;
  r.trials = trials;
  r.det_reference = std::abs(det);
  const bool tau_zero = base.tau <= kTangleTol;

  std::mt19937_64 seeds(seed);
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s_general = seeds();
    const std::uint64_t s_special = seeds();

    const Spinor3 moved = apply_slocc(unit, random_slocc(s_general, false));
    if (slocc_classify(moved).label == base.label) ++r.preserved;
    r.max_tau_transformed = std::max(r.max_tau_transformed, three_tangle(moved));

    const Spinor3 special = apply_slocc(unit, random_slocc(s_special, true));
    r.max_tau_transformed = std::max(r.max_tau_transformed, three_tangle(special));
    if (!tau_zero) {
      const double drift = std::abs(hyperdeterminant(special) - det) / std::abs(det);
      r.max_det_drift = std::max(r.max_det_drift, drift);
    }
  }
  r.det_invariant = tau_zero ? r.max_tau_transformed <= kTangleTol
                             : r.max_det_drift <= kDetDriftTol;
  return r;
}

}  // namespace qgeom
