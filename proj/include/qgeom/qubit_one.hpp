// SPDX-License-Identifier: Apache-2.0
//
// Single qubit: spinor <-> spherical angles <-> Bloch vector <-> density
// matrix.
//
// Orientation: |up> = (1, 0) sits at the north pole, z = +1/2. The density
// matrix in the computational basis is therefore
//
//     rho = [ t + z    x - i y ]
//           [ x + i y  t - z   ]
//
// which puts the spin-up projector |up><up| at (t, x, y, z) = (1/2, 0, 0, 1/2).
#pragma once

#include <array>
#include <utility>

#include "qgeom/spinor.hpp"

namespace qgeom {

// (t, x, y, z) with t the half-trace and (x, y, z) the Bloch vector; the
// closed ball r <= 1/2 holds the physical states, its surface the pure ones.
struct DensityMatrix2 {
  double t = 0.5;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double radius() const;
  bool is_valid(double tol = 1e-12) const;
  bool is_pure(double tol = 1e-12) const;
  std::array<Complex, 4> matrix() const;  // row-major
};

struct SphericalDirection {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

// (cos(theta/2), sin(theta/2) e^{i phi}).
Spinor1 spinor_from_angles(const SphericalDirection& d);

// Left inverse of spinor_from_angles on rays. Gauge: the first nonzero
// component is made real positive, and phi = 0 at either pole.
SphericalDirection angles_from_spinor(const Spinor1& s);

DensityMatrix2 bloch_from_spinor(const Spinor1& s);

// (t + r, t - r). Throws if the smaller eigenvalue is below -1e-12.
std::pair<double, double> density_eigenvalues(const DensityMatrix2& d);

}  // namespace qgeom
