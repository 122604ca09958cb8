// SPDX-License-Identifier: Apache-2.0
#include "qgeom/qubit_one.hpp"

#include <cmath>
#include <numbers>

namespace qgeom {

namespace {

constexpr double kPoleTol = 1e-15;

}  // namespace

double DensityMatrix2::radius() const { return std::sqrt(x * x + y * y + z * z); }

bool DensityMatrix2::is_valid(double tol) const {
  if (!std::isfinite(t) || !std::isfinite(x) || !std::isfinite(y) ||
      !std::isfinite(z))
    return false;
  return x * x + y * y + z * z <= t * t + tol;
}

bool DensityMatrix2::is_pure(double tol) const {
  return std::abs(x * x + y * y + z * z - t * t) <= tol;
}

std::array<Complex, 4> DensityMatrix2::matrix() const {
  return {Complex(t + z, 0.0), Complex(x, -y), Complex(x, y), Complex(t - z, 0.0)};
}

Spinor1 spinor_from_angles(const SphericalDirection& d) {
  if (!std::isfinite(d.theta) || !std::isfinite(d.phi) || d.theta < 0.0 ||
      d.theta > std::numbers::pi || d.phi < 0.0 || d.phi >= 2.0 * std::numbers::pi)
    throw Error(ErrorCode::InvalidArgument,
                "angles out of range: theta in [0, pi], phi in [0, 2 pi)");
  return Spinor1{Complex(std::cos(0.5 * d.theta), 0.0),
                 std::polar(std::sin(0.5 * d.theta), d.phi)};
}

SphericalDirection angles_from_spinor(const Spinor1& s) {
  const Spinor1 u = s.normalized();
  const double a = std::abs(u[0]);
  const double b = std::abs(u[1]);
  SphericalDirection d;
  d.theta = 2.0 * std::atan2(b, a);
  if (a <= kPoleTol || b <= kPoleTol) {
    d.phi = 0.0;
    return d;
  }
  // Relative phase of the second component once the first is real positive.
  double phi = std::arg(u[1]) - std::arg(u[0]);
  phi = std::fmod(phi, 2.0 * std::numbers::pi);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  d.phi = phi;
  return d;
}

DensityMatrix2 bloch_from_spinor(const Spinor1& s) {
  const Spinor1 u = s.normalized();
  const Complex ab = std::conj(u[0]) * u[1];
  DensityMatrix2 d;
  d.t = 0.5;
  d.x = ab.real();
  d.y = ab.imag();
  d.z = 0.5 * (std::norm(u[0]) - std::norm(u[1]));
  return d;
}

std::pair<double, double> density_eigenvalues(const DensityMatrix2& d) {
  if (!d.is_valid(1e-12))
    throw Error(ErrorCode::InvalidArgument,
                "not a density matrix: Bloch vector outside the ball");
  const double r = d.radius();
  const double lo = d.t - r;
  if (lo < -1e-12)
    throw Error(ErrorCode::InvalidArgument, "negative eigenvalue");
  return {d.t + r, lo};
}

}  // namespace qgeom
