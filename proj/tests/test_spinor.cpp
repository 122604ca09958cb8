// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgeom/qubit_three.hpp"
#include "qgeom/spinor.hpp"
#include "qgeom/state.hpp"
#include "test_support.hpp"

using namespace qgeom;
using test::Rng;

namespace {

const Complex I{0.0, 1.0};

template <std::size_t R>
double max_diff(const Spinor<R>& a, const Spinor<R>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < Spinor<R>::kSize; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("epsilon identity eps^{AB} eps_{CB} = delta") {
  const Spinor2 d = contract(epsilon_upper(), epsilon_lower(), SlotPair{1, 1});
  CHECK(d(0, 0) == Complex(1.0));
  CHECK(d(1, 1) == Complex(1.0));
  CHECK(d(0, 1) == Complex(0.0));
  CHECK(d(1, 0) == Complex(0.0));
  CHECK(d.is_lowered(1));
  CHECK_FALSE(d.is_lowered(0));
}

TEST_CASE("lowering matches the stated convention") {
  const Spinor1 up{1.0, 0.0};
  const Spinor1 low = lower_index(up, 0);
  CHECK(low[0] == Complex(0.0));
  CHECK(low[1] == Complex(1.0));
  CHECK(low.is_lowered(0));

  // Route two: psi_B = psi^A eps_{AB} through the contraction engine.
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Spinor3 s = rng.spinor<3>();
    const Spinor3 direct = lower_index(s, 1);
    // psi^{A X C} eps_{X B} gives slots (A, C, B); move B back to the middle.
    const Spinor3 via = permute_slots(contract(s, epsilon_lower(), SlotPair{1, 0}),
                                      {0, 2, 1});
    CHECK(max_diff(direct, via) == doctest::Approx(0.0));
  }
}

TEST_CASE("raise undoes lower on every slot and rank") {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Spinor1 s1 = rng.spinor<1>();
    CHECK(max_diff(raise_index(lower_index(s1, 0), 0), s1) < 1e-15);
    const Spinor3 s3 = rng.spinor<3>();
    for (std::size_t slot = 0; slot < 3; ++slot)
      CHECK(max_diff(raise_index(lower_index(s3, slot), slot), s3) < 1e-15);
    CHECK(max_diff(raise_all(lower_all(s3)), s3) < 1e-15);
  }
}

TEST_CASE("index errors") {
  const Spinor1 s{1.0, 0.0};
  CHECK_THROWS_AS(lower_index(s, 1), Error);
  CHECK_THROWS_AS(raise_index(s, 0), Error);  // already upper
  CHECK_THROWS_AS(lower_index(lower_index(s, 0), 0), Error);
  try {
    (void)contract(s, s, SlotPair{0, 0});
    FAIL("expected variance mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VarianceMismatch);
  }
  try {
    (void)contract(Spinor2(), lower_all(Spinor2()), SlotPair{0, 0}, SlotPair{0, 1});
    FAIL("expected duplicate slot error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("psi^A psi_A vanishes") {
  auto self = [](const Spinor1& s) {
    return contract(s, lower_index(s, 0), SlotPair{0, 0}).scalar();
  };
  CHECK(std::abs(self(Spinor1{1.0, 0.0})) == 0.0);
  CHECK(std::abs(self(Spinor1{2.0, 3.0 * I})) < 1e-15);
  Rng rng(2);
  for (int t = 0; t < 100; ++t) CHECK(std::abs(self(rng.spinor<1>())) < 1e-15);
}

TEST_CASE("singlet self-contraction has unit modulus") {
  const Spinor2 z = epsilon_upper() / std::sqrt(2.0);
  const Complex v = contract(z, lower_all(z), SlotPair{0, 0}, SlotPair{1, 1}).scalar();
  CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-15));
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Spinor2 s = rng.spinor<2>();
    const Complex c = contract(s, lower_all(s), SlotPair{0, 0}, SlotPair{1, 1}).scalar();
    CHECK(std::abs(c - test::quadric_oracle(s)) < 1e-14);
  }
}

TEST_CASE("epsilon Jacobi identity v^A e^{BC} + v^B e^{CA} + v^C e^{AB} = 0") {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const Spinor1 v = rng.spinor<1>();
    Spinor3 sum;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          const Spinor2 e = epsilon_upper();
          sum(a, b, c) = v[a] * e(b, c) + v[b] * e(c, a) + v[c] * e(a, b);
        }
    CHECK(sum.norm() < 1e-15);
  }
}

TEST_CASE("symmetrize") {
  Rng rng(5);
  SUBCASE("matches the six-permutation oracle and is idempotent") {
    for (int t = 0; t < 100; ++t) {
      const Spinor3 s = rng.spinor<3>();
      const Spinor3 sym = symmetrize(s);
      CHECK(max_diff(sym, test::symmetrize_oracle(s)) < 1e-15);
      CHECK(max_diff(symmetrize(sym), sym) < 1e-15);
    }
  }
  SUBCASE("kills alpha^A eps^{BC}") {
    const Spinor1 a = rng.spinor<1>();
    CHECK(symmetrize(outer(a, epsilon_upper())).norm() < 1e-15);
  }
  SUBCASE("up up down averages over positions") {
    const Spinor3 s = symmetrize(test::basis3(0, 0, 1));
    const Spinor3 expect =
        (test::basis3(0, 0, 1) + test::basis3(0, 1, 0) + test::basis3(1, 0, 0)) / 3.0;
    CHECK(max_diff(s, expect) < 1e-16);
  }
}

TEST_CASE("conjugate_state is the antipodal map") {
  const Spinor1 up{1.0, 0.0};
  const Spinor1 down{0.0, 1.0};
  CHECK(projective_equal(conjugate_state(up), down));
  CHECK(projective_equal(conjugate_state(down), up));
  const Spinor1 plus = Spinor1{1.0, 1.0} / std::sqrt(2.0);
  const Spinor1 c = conjugate_state(plus);
  CHECK(c[0] == Complex(-1.0 / std::sqrt(2.0)));
  CHECK(std::abs(c[1] - 1.0 / std::sqrt(2.0)) < 1e-16);
  CHECK(std::abs(inner_product(plus, c)) < 1e-16);
  CHECK_THROWS_AS(conjugate_state(Spinor1{}), Error);

  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const Spinor1 s = rng.spinor<1>();
    CHECK(std::abs(inner_product(s, conjugate_state(s))) < 1e-15);
    CHECK(projective_equal(conjugate_state(conjugate_state(s)), s));
  }
}

TEST_CASE("inner product") {
  CHECK(inner_product(Spinor1{1.0, 0.0}, Spinor1{0.0, 1.0}) == Complex(0.0));
  Rng rng(7);
  const Spinor3 s = rng.spinor<3>();
  const Complex n = inner_product(s, s);
  CHECK(n.imag() == doctest::Approx(0.0));
  CHECK(n.real() == doctest::Approx(s.norm_squared()));
  // Conjugate-linear in the first slot.
  const Spinor3 t = rng.spinor<3>();
  CHECK(std::abs(inner_product(s * I, t) + I * inner_product(s, t)) < 1e-15);
  const Spinor3 ghz = (test::basis3(0, 0, 0) + test::basis3(1, 1, 1)) / std::sqrt(2.0);
  const Spinor3 w =
      (test::basis3(0, 0, 1) + test::basis3(0, 1, 0) + test::basis3(1, 0, 0)) / std::sqrt(3.0);
  CHECK(inner_product(ghz, w) == Complex(0.0));
}

TEST_CASE("projective equality") {
  Rng rng(8);
  const Spinor2 p = rng.spinor<2>();
  CHECK(projective_equal(p, p * (3.0 * I)));
  CHECK_FALSE(projective_equal(Spinor1{1.0, 0.0}, Spinor1{0.0, 1.0}));
  const Spinor3 ghz = (test::basis3(0, 0, 0) + test::basis3(1, 1, 1)) / std::sqrt(2.0);
  const Spinor3 w =
      (test::basis3(0, 0, 1) + test::basis3(0, 1, 0) + test::basis3(1, 0, 0)) / std::sqrt(3.0);
  CHECK_FALSE(ProjectivePoint<3>(ghz) == ProjectivePoint<3>(w));
  CHECK_THROWS_AS(ProjectivePoint<1>(Spinor1{}), Error);
  CHECK_THROWS_AS(projective_equal(Spinor1{}, Spinor1{1.0, 0.0}), Error);

  // Reflexive and symmetric at any tolerance; transitive at tol = 0 on exact
  // phase multiples.
  for (int t = 0; t < 100; ++t) {
    const Spinor2 a = rng.spinor<2>();
    const Spinor2 b = rng.spinor<2>();
    const double tol = rng.uniform(0.0, 0.5);
    CHECK(projective_equal(a, a, tol));
    CHECK(projective_equal(a, b, tol) == projective_equal(b, a, tol));
    const Spinor2 ai = a * I;
    const Spinor2 am = ai * -1.0;
    if (projective_equal(a, ai, 0.0) && projective_equal(ai, am, 0.0))
      CHECK(projective_equal(a, am, 0.0));
  }
}

TEST_CASE("random states") {
  const AnySpinor a = random_state(3, 42);
  const AnySpinor b = random_state(3, 42);
  CHECK(amplitudes(a) == amplitudes(b));
  CHECK(amplitudes(random_state(3, 43)) != amplitudes(a));
  for (int q = 1; q <= 3; ++q)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      double n = 0.0;
      for (const auto& z : amplitudes(random_state(q, seed))) n += std::norm(z);
      CHECK(std::abs(n - 1.0) < 1e-12);
    }
  CHECK_THROWS_AS(random_state(0, 1), Error);
  CHECK_THROWS_AS(random_state(4, 1), Error);

  // Monte-Carlo sanity: mean three-tangle strictly inside (0, 1).
  double mean = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    mean += three_tangle(std::get<Spinor3>(random_state(3, seed)));
  mean /= 1000.0;
  CHECK(mean > 0.0);
  CHECK(mean < 1.0);
}
