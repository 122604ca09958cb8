// SPDX-License-Identifier: Apache-2.0
//
// Two qubits: the Segre quadric of product states inside P^3, concurrence,
// singlet and triplet states, the conic of symmetric products and the
// singlet/triplet measurement construction.
#pragma once

#include <array>

#include "qgeom/projective.hpp"
#include "qgeom/spinor.hpp"

namespace qgeom {

inline constexpr double kFactorTol = 1e-8;
inline constexpr double kConicTol = 1e-10;

// (phi, psi) -> eps_{AC} eps_{BD} phi^{AB} psi^{CD}.
Complex quadric_form(const Spinor2& phi, const Spinor2& psi);

// The same form as a symmetric 4x4 matrix, for the line solver.
SymmetricForm<2> segre_quadric();

// eps_{AC} eps_{BD} psi^{AB} psi^{CD} = 2 (psi00 psi11 - psi01 psi10).
Complex quadric_value(const Spinor2& psi);

// |quadric_value| / <psi, psi>, in [0, 1].
double concurrence(const Spinor2& psi);

struct ProductPair {
  Spinor1 first;
  Spinor1 second;
};

Spinor2 segre_embed(const ProductPair& p);

// Factors of a product state; throws NotProduct when concurrence exceeds
// kFactorTol instead of projecting onto the nearest product.
ProductPair segre_factor(const Spinor2& psi);

// eps^{AB} / sqrt 2.
Spinor2 singlet();

// m = +1: psi psi, m = -1: psi^ psi^, m = 0: normalized psi^(A psi^^B),
// where psi^ is the antipodal state. All unit norm.
Spinor2 triplet(const Spinor1& psi, int m);

// Symmetric and antisymmetric parts of a rank-2 spinor.
Spinor2 antisymmetric_part(const Spinor2& psi);

bool on_conic(const Spinor2& psi);

// For a state on the line joining singlet() and triplet(direction, 0),
// returns the two product states where that line meets the quadric,
// ordered as (direction x antipode, antipode x direction).
std::array<Spinor2, 2> measurement_outcomes(const Spinor2& state,
                                            const Spinor1& direction);

}  // namespace qgeom
