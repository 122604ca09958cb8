// SPDX-License-Identifier: Apache-2.0
#include "qgeom/projective.hpp"

namespace qgeom {

HomogeneousRoots solve_homogeneous_quadratic(const QuadraticFormOnLine& f,
                                             double reference) {
  const double scale =
      std::max({std::abs(f.q_pp), std::abs(f.q_pq), std::abs(f.q_qq)});
  if (!(scale > 1e-12 * reference))
    throw Error(ErrorCode::LineOnQuadric, "line lies entirely on the quadric");

  // Work with coefficients of unit size so the tangency cut is scale-free.
  const Complex a = f.q_pp / scale;
  const Complex b = f.q_pq / scale;
  const Complex c = f.q_qq / scale;
  const Complex disc = b * b - a * c;

  HomogeneousRoots out;
  if (std::abs(disc) < kTangencyTol) {
    out.double_root = true;
    // Double root (-b : a) or equivalently (c : -b); take the better scaled.
    const std::array<Complex, 2> r = std::abs(a) >= std::abs(c)
                                         ? std::array<Complex, 2>{-b, a}
                                         : std::array<Complex, 2>{c, -b};
    out.roots = {r, r};
    return out;
  }

  const Complex root = std::sqrt(disc);
  const double sigma = std::real(std::conj(b) * root) >= 0.0 ? 1.0 : -1.0;
  const Complex s = -(b + sigma * root);
  // |s| >= |root| > 0 here, so neither root degenerates to (0 : 0).
  out.roots = {std::array<Complex, 2>{s, a}, std::array<Complex, 2>{c, s}};
  return out;
}

}  // namespace qgeom
