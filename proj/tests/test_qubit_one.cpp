// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "qgeom/projective.hpp"
#include "qgeom/qubit_one.hpp"
#include "test_support.hpp"

using namespace qgeom;
using test::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("spinor_from_angles") {
  const Spinor1 n = spinor_from_angles({0.0, 1.3});
  CHECK(n[0] == Complex(1.0));
  CHECK(n[1] == Complex(0.0));
  const Spinor1 s = spinor_from_angles({kPi, 0.0});
  CHECK(std::abs(s[0]) < 1e-16);
  CHECK(s[1] == Complex(1.0));
  const Spinor1 e = spinor_from_angles({kPi / 2, kPi / 2});
  CHECK(std::abs(e[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(e[1] - Complex(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);

  CHECK_THROWS_AS(spinor_from_angles({-0.1, 0.0}), Error);
  CHECK_THROWS_AS(spinor_from_angles({kPi + 0.1, 0.0}), Error);
  CHECK_THROWS_AS(spinor_from_angles({1.0, 2 * kPi}), Error);
}

TEST_CASE("angles_from_spinor") {
  CHECK(angles_from_spinor(Spinor1{1.0, 0.0}).theta == 0.0);
  const auto south = angles_from_spinor(Spinor1{0.0, std::polar(1.0, 0.3)});
  CHECK(south.theta == doctest::Approx(kPi));
  CHECK(south.phi == 0.0);
  CHECK_THROWS_AS(angles_from_spinor(Spinor1{}), Error);

  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const SphericalDirection d{rng.uniform(1e-3, kPi - 1e-3), rng.uniform(0.0, 2 * kPi)};
    // Arbitrary global phase and scale must not matter.
    const Spinor1 s = spinor_from_angles(d) * std::polar(rng.uniform(0.5, 3.0), rng.uniform(0.0, 6.0));
    const auto back = angles_from_spinor(s);
    CHECK(std::abs(back.theta - d.theta) < 1e-12);
    const double dphi = std::remainder(back.phi - d.phi, 2 * kPi);
    CHECK(std::abs(dphi) < 1e-12);
  }
}

TEST_CASE("bloch_from_spinor") {
  const auto up = bloch_from_spinor(Spinor1{1.0, 0.0});
  CHECK(up.x == 0.0);
  CHECK(up.y == 0.0);
  CHECK(up.z == 0.5);
  CHECK(up.t == 0.5);
  const auto plus = bloch_from_spinor(Spinor1{1.0, 1.0} / std::sqrt(2.0));
  CHECK(plus.x == doctest::Approx(0.5));
  CHECK(std::abs(plus.y) < 1e-16);
  CHECK(std::abs(plus.z) < 1e-16);

  // rho_00 = t + z = |a|^2 puts spin-up at the top of the matrix.
  const auto m = up.matrix();
  CHECK(m[0] == Complex(1.0));
  CHECK(m[3] == Complex(0.0));

  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const double th = rng.uniform(0.0, kPi);
    const double ph = rng.uniform(0.0, 2 * kPi);
    const auto d = bloch_from_spinor(spinor_from_angles({th, ph}));
    CHECK(d.x == doctest::Approx(0.5 * std::sin(th) * std::cos(ph)).epsilon(1e-12));
    CHECK(std::abs(d.x - 0.5 * std::sin(th) * std::cos(ph)) < 1e-12);
    CHECK(std::abs(d.y - 0.5 * std::sin(th) * std::sin(ph)) < 1e-12);
    CHECK(std::abs(d.z - 0.5 * std::cos(th)) < 1e-12);
  }
  CHECK_THROWS_AS(bloch_from_spinor(Spinor1{}), Error);
}

TEST_CASE("density matrix from the outer product matches the Bloch form") {
  Rng rng(33);
  for (int t = 0; t < 50; ++t) {
    const Spinor1 s = rng.unit<1>();
    const auto m = bloch_from_spinor(s).matrix();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(std::abs(m[2 * i + j] - s[i] * std::conj(s[j])) < 1e-15);
  }
}

TEST_CASE("density eigenvalues") {
  const auto pure = density_eigenvalues(bloch_from_spinor(Spinor1{1.0, 0.0}));
  CHECK(pure.first == doctest::Approx(1.0));
  CHECK(pure.second == doctest::Approx(0.0));
  const auto mixed = density_eigenvalues({0.5, 0.0, 0.0, 0.0});
  CHECK(mixed.first == 0.5);
  CHECK(mixed.second == 0.5);
  const auto edge = density_eigenvalues({0.5, 0.3, 0.0, 0.4});
  CHECK(edge.first == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(edge.second) < 1e-15);
  CHECK_THROWS_AS(density_eigenvalues({0.5, 0.5, 0.5, 0.0}), Error);

  Rng rng(34);
  for (int t = 0; t < 200; ++t) {
    // Points of the closed ball.
    const double r = 0.5 * std::cbrt(rng.uniform(0.0, 1.0));
    const double th = std::acos(rng.uniform(-1.0, 1.0));
    const double ph = rng.uniform(0.0, 2 * kPi);
    const DensityMatrix2 d{0.5, r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph),
                           r * std::cos(th)};
    CHECK(d.is_valid());
    const auto [hi, lo] = density_eigenvalues(d);
    CHECK(lo >= -1e-12);
    CHECK(hi + lo == doctest::Approx(1.0));
  }
}

TEST_CASE("sphere properties") {
  Rng rng(35);
  for (int t = 0; t < 200; ++t) {
    const Spinor1 s = rng.spinor<1>();
    const auto b = bloch_from_spinor(s);
    CHECK(std::abs(b.radius() - 0.5) < 1e-12);
    CHECK(b.is_pure());
    const auto c = bloch_from_spinor(conjugate_state(s));
    CHECK(std::abs(c.x + b.x) < 1e-12);
    CHECK(std::abs(c.y + b.y) < 1e-12);
    CHECK(std::abs(c.z + b.z) < 1e-12);

    // FS distance is the angle between Bloch directions.
    const Spinor1 s2 = rng.spinor<1>();
    const auto b2 = bloch_from_spinor(s2);
    const double cosang = 4.0 * (b.x * b2.x + b.y * b2.y + b.z * b2.z);
    CHECK(std::abs(std::cos(fs_distance(s, s2)) - cosang) < 1e-10);
  }
}
