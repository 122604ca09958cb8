// SPDX-License-Identifier: Apache-2.0
//
// Three qubits: the symmetric/asymmetric split of P^7, the twisted cubic and
// its tangent developable, the Cayley hyperdeterminant and three-tangle,
// and SLOCC classification.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "qgeom/spinor.hpp"

namespace qgeom {

inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kVarietyTol = 1e-10;
inline constexpr double kRankTol = 1e-8;
inline constexpr double kTangleTol = 1e-8;

struct SymAsymSplit {
  Spinor3 sym;
  Spinor3 asym;
};

SymAsymSplit sym_asym_split(const Spinor3& psi);

// True when the part outside the symmetric subspace is below `tol` relative
// to the norm of psi.
bool is_symmetric(const Spinor3& psi, double tol = kSymmetryTol);
bool is_asymmetric(const Spinor3& psi, double tol = kSymmetryTol);

// alpha^A eps^{BC} + beta^B eps^{CA} + gamma^C eps^{AB}. The map kills
// (v, v, v), so triples are kept in the gauge alpha + beta + gamma = 0.
struct AsymTriple {
  Spinor1 alpha;
  Spinor1 beta;
  Spinor1 gamma;
};

AsymTriple gauge_fix(const AsymTriple& t);
Spinor3 asym_compose(const AsymTriple& t);

// Inverse of asym_compose on the asymmetric subspace; throws
// HasSymmetricPart if psi is not (numerically) in that subspace.
AsymTriple asym_extract(const Spinor3& psi);

// Party `party` (1, 2 or 3) in state alpha, the other two in the singlet.
Spinor3 singlet_line_point(int party, const Spinor1& alpha);

// psi^A psi^B psi^C.
Spinor3 veronese3(const Spinor1& psi);

// Q_{AB} = psi_A^{CD} psi_{BCD} of the symmetric part. Both slots lower.
Spinor2 q_tensor(const Spinor3& psi);

// Q_{AB} Q^{AB}.
Complex q_invariant(const Spinor2& q);

bool on_twisted_cubic(const Spinor3& psi);
bool on_tangent_developable_sym(const Spinor3& psi);

// psi_{ABC} alpha^B alpha^C = 0: psi on the tangent line at alpha alpha alpha.
bool tangent_line_membership(const Spinor3& psi, const Spinor1& alpha);

// psi_{ABC} alpha^A alpha^B alpha^C = 0: psi on the osculating plane there.
bool osculating_plane_membership(const Spinor3& psi, const Spinor1& alpha);

// The symmetric state on the tangent line at alpha alpha alpha that also lies
// on the osculating plane at beta beta beta (unit norm).
Spinor3 tangent_osculating_intersection(const Spinor1& alpha,
                                        const Spinor1& beta);

// (psi psi psi + psi^ psi^ psi^) / sqrt 2 with psi^ the antipodal state.
Spinor3 ghz_state(const Spinor1& psi);

// (psi psi psi^ + psi psi^ psi + psi^ psi psi) / sqrt 3.
Spinor3 w_state(const Spinor1& psi);

// Cayley 2x2x2 hyperdeterminant, d1 - 2 d2 + 4 d3.
Complex hyperdeterminant(const Spinor3& psi);

// 4 |Det(psi)| / <psi, psi>^2.
double three_tangle(const Spinor3& psi);

// T_{AD} T_{PQ} eps^{AP} eps^{DQ} with T_{AD} = psi_A^{BC} psi_{DBC}.
// Vanishes exactly where Det does.
Complex quartic_H_value(const Spinor3& psi);

// x beta gamma + alpha y gamma + alpha beta z: a point of the tangent
// 3-plane to the product variety at alpha beta gamma.
Spinor3 tangent_plane_form(const Spinor1& alpha, const Spinor1& beta,
                           const Spinor1& gamma, const Spinor1& x,
                           const Spinor1& y, const Spinor1& z);

struct LocalRanks {
  std::array<int, 3> ranks{};
  // sigma_2 / sigma_1 of each single-party flattening.
  std::array<double, 3> singular_ratio{};
};

LocalRanks local_ranks(const Spinor3& psi);

enum class SloccLabel { Separable, BisepA, BisepB, BisepC, W, GHZ };

std::string_view to_string(SloccLabel label);

struct SloccClass {
  SloccLabel label;
  std::array<int, 3> ranks;
  double tau;
};

SloccClass slocc_classify(const Spinor3& psi);

// Row-major 2x2 complex matrix acting on one qubit.
using LocalOperator = std::array<Complex, 4>;
using LocalOperators = std::array<LocalOperator, 3>;

Complex determinant(const LocalOperator& m);

// (A x B x C) psi. Throws SingularOperator if any |det| <= 1e-14 scale.
Spinor3 apply_slocc(const Spinor3& psi, const LocalOperators& ops);

// Complex normal entries, redrawn while |det| <= 1e-6; with `special` the
// matrices are rescaled to det = 1.
LocalOperators random_slocc(std::uint64_t seed, bool special = false);

}  // namespace qgeom
