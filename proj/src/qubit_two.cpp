// SPDX-License-Identifier: Apache-2.0
#include "qgeom/qubit_two.hpp"

#include <cmath>

namespace qgeom {

Complex quadric_form(const Spinor2& phi, const Spinor2& psi) {
  // Lower both slots of psi, then contract phi^{AB} psi_{AB}; with
  // psi_{AB} = psi^{CD} eps_{CA} eps_{DB} this is the stated contraction.
  const Spinor2 lowered = lower_all(Spinor2(psi.components()));
  return contract(Spinor2(phi.components()), lowered, SlotPair{0, 0},
                  SlotPair{1, 1})
      .scalar();
}

SymmetricForm<2> segre_quadric() {
  SymmetricForm<2>::Matrix m{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Spinor2 ei;
      Spinor2 ej;
      ei[i] = 1.0;
      ej[j] = 1.0;
      m[i * 4 + j] = quadric_form(ei, ej);
    }
  return SymmetricForm<2>(m);
}

Complex quadric_value(const Spinor2& psi) { return quadric_form(psi, psi); }

double concurrence(const Spinor2& psi) {
  const double n = psi.norm_squared();
  if (!(n > kZeroNormSquared))
    throw Error(ErrorCode::ZeroState, "concurrence of the zero state");
  return std::min(1.0, std::abs(quadric_value(psi)) / n);
}

Spinor2 segre_embed(const ProductPair& p) {
  if (p.first.is_zero() || p.second.is_zero())
    throw Error(ErrorCode::ZeroState, "zero factor in Segre embedding");
  return outer(p.first, p.second);
}

ProductPair segre_factor(const Spinor2& psi) {
  if (concurrence(psi) >= kFactorTol)
    throw Error(ErrorCode::NotProduct, "not a product state");
  std::size_t best = 0;
  for (std::size_t f = 1; f < 4; ++f)
    if (std::abs(psi[f]) > std::abs(psi[best])) best = f;
  const int row = Spinor2::slot_value(best, 0);
  const int col = Spinor2::slot_value(best, 1);
  // Rank one: psi^{AB} = psi^{A col} psi^{row B} / psi^{row col}.
  Spinor1 first{psi(0, col), psi(1, col)};
  Spinor1 second{psi(row, 0) / psi[best], psi(row, 1) / psi[best]};
  const double scale = std::sqrt(second.norm());
  return {first * scale, second / scale};
}

Spinor2 singlet() { return epsilon_upper() / std::sqrt(2.0); }

Spinor2 triplet(const Spinor1& psi, int m) {
  const Spinor1 up = psi.normalized();
  const Spinor1 down = conjugate_state(up);
  switch (m) {
    case 1:
      return outer(up, up);
    case -1:
      return outer(down, down);
    case 0:
      return (outer(up, down) + outer(down, up)).normalized();
    default:
      throw Error(ErrorCode::InvalidArgument, "triplet m must be -1, 0 or +1");
  }
}

Spinor2 antisymmetric_part(const Spinor2& psi) { return psi - symmetrize(psi); }

bool on_conic(const Spinor2& psi) {
  const double n = psi.norm_squared();
  if (!(n > kZeroNormSquared)) return false;
  if (antisymmetric_part(psi).norm_squared() >= kConicTol * kConicTol * n)
    return false;
  return std::abs(quadric_value(psi)) / n < kConicTol;
}

std::array<Spinor2, 2> measurement_outcomes(const Spinor2& state,
                                            const Spinor1& direction) {
  if (state.is_zero()) throw Error(ErrorCode::ZeroState, "zero state");
  const ProjectiveLine<2> line(singlet(), triplet(direction, 0));
  if (!line.contains(state, kDefaultProjectiveTol))
    throw Error(ErrorCode::OffLine,
                "state is not on the singlet/triplet line for this direction");
  const auto hit = line_quadric_intersect(line, segre_quadric());

  const Spinor1 up = direction.normalized();
  const Spinor2 up_down = outer(up, conjugate_state(up));
  std::array<Spinor2, 2> out = hit.points;
  if (transition_probability(out[1], up_down) > transition_probability(out[0], up_down))
    std::swap(out[0], out[1]);
  return out;
}

}  // namespace qgeom
