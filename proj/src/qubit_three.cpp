// SPDX-License-Identifier: Apache-2.0
#include "qgeom/qubit_three.hpp"

#include <cmath>
#include <random>

namespace qgeom {

namespace {

Spinor3 upper(const Spinor3& psi) { return Spinor3(psi.components()); }

void require_nonzero(const Spinor1& s, const char* what) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroState, what);
}

void require_nonzero(const Spinor3& s, const char* what) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroState, what);
}

// Component of a flattening: row = value of `party`, column = the other two
// slots in order.
Complex flat_entry(const Spinor3& psi, int party, int row, int col) {
  std::array<int, 3> idx{};
  idx[party] = row;
  int k = 0;
  for (int s = 0; s < 3; ++s) {
    if (s == party) continue;
    idx[s] = (col >> (1 - k)) & 1;
    ++k;
  }
  return psi[Spinor3::flat_index(idx)];
}

}  // namespace

SymAsymSplit sym_asym_split(const Spinor3& psi) {
  const Spinor3 sym = symmetrize(upper(psi));
  return {sym, upper(psi) - sym};
}

bool is_symmetric(const Spinor3& psi, double tol) {
  const double n = psi.norm_squared();
  if (!(n > kZeroNormSquared)) return false;
  return sym_asym_split(psi).asym.norm_squared() < tol * tol * n;
}

bool is_asymmetric(const Spinor3& psi, double tol) {
  const double n = psi.norm_squared();
  if (!(n > kZeroNormSquared)) return false;
  return sym_asym_split(psi).sym.norm_squared() < tol * tol * n;
}

AsymTriple gauge_fix(const AsymTriple& t) {
  const Spinor1 shift = (t.alpha + t.beta + t.gamma) / 3.0;
  return {t.alpha - shift, t.beta - shift, t.gamma - shift};
}

Spinor3 asym_compose(const AsymTriple& raw) {
  const AsymTriple t = gauge_fix(raw);
  const Spinor2 eps = epsilon_upper();
  // alpha^A eps^{BC}
  const Spinor3 a = outer(t.alpha, eps);
  // beta^B eps^{CA}: eps^{CA} beta^B has slots (C, A, B); reorder to (A, B, C).
  const Spinor3 b = permute_slots(outer(eps, t.beta), {2, 0, 1});
  // gamma^C eps^{AB}
  const Spinor3 c = outer(eps, t.gamma);
  return a + b + c;
}

AsymTriple asym_extract(const Spinor3& psi) {
  if (!psi.is_zero() && !is_asymmetric(psi))
    throw Error(ErrorCode::HasSymmetricPart,
                "state has a nonzero symmetric part");
  // In the gauge alpha + beta + gamma = 0, psi^{ABC} eps_{BC} = 3 alpha^A and
  // cyclically for beta and gamma.
  const Spinor3 p = upper(psi);
  const Spinor2 eps = epsilon_lower();
  AsymTriple t;
  t.alpha = contract(p, eps, SlotPair{1, 0}, SlotPair{2, 1}) / 3.0;
  t.beta = contract(p, eps, SlotPair{2, 0}, SlotPair{0, 1}) / 3.0;
  t.gamma = contract(p, eps, SlotPair{0, 0}, SlotPair{1, 1}) / 3.0;
  return t;
}

Spinor3 singlet_line_point(int party, const Spinor1& alpha) {
  require_nonzero(alpha, "singlet line point needs a nonzero spinor");
  const Spinor2 eps = epsilon_upper();
  switch (party) {
    case 1:
      return outer(alpha, eps).normalized();
    case 2:
      // alpha^B eps^{AC}
      return permute_slots(outer(alpha, eps), {1, 0, 2}).normalized();
    case 3:
      return outer(eps, alpha).normalized();
    default:
      throw Error(ErrorCode::InvalidArgument, "party must be 1, 2 or 3");
  }
}

Spinor3 veronese3(const Spinor1& psi) {
  require_nonzero(psi, "Veronese image of the zero spinor");
  return outer(psi, psi, psi);
}

Spinor2 q_tensor(const Spinor3& psi) {
  const Spinor3 sym = symmetrize(upper(psi));
  const Spinor3 mixed = lower_index(sym, 0);  // psi_A^{CD}
  const Spinor3 low = lower_all(sym);         // psi_{BCD}
  return contract(mixed, low, SlotPair{1, 1}, SlotPair{2, 2});
}

Complex q_invariant(const Spinor2& q) {
  const Spinor2 low = lower_all(q);
  return contract(low, raise_all(low), SlotPair{0, 0}, SlotPair{1, 1}).scalar();
}

bool on_twisted_cubic(const Spinor3& psi) {
  if (!is_symmetric(psi)) return false;
  const Spinor2 q = q_tensor(psi);
  const double n = psi.norm_squared();
  for (const auto& z : q.components())
    if (std::abs(z) >= kVarietyTol * n) return false;
  return true;
}

bool on_tangent_developable_sym(const Spinor3& psi) {
  if (!is_symmetric(psi)) return false;
  const Spinor2 q = q_tensor(psi);
  const double n = psi.norm_squared();
  return std::abs(q_invariant(q)) < kVarietyTol * (q.norm_squared() + n * n);
}

bool tangent_line_membership(const Spinor3& psi, const Spinor1& alpha) {
  require_nonzero(alpha, "tangent line at the zero spinor");
  if (!is_symmetric(psi)) return false;
  const Spinor3 low = lower_all(upper(psi));
  const Spinor2 aa = outer(Spinor1(alpha.components()), Spinor1(alpha.components()));
  const Spinor1 v = contract(low, aa, SlotPair{1, 0}, SlotPair{2, 1});
  const double scale = psi.norm() * alpha.norm_squared();
  return v.norm() < kVarietyTol * scale;
}

bool osculating_plane_membership(const Spinor3& psi, const Spinor1& alpha) {
  require_nonzero(alpha, "osculating plane at the zero spinor");
  if (!is_symmetric(psi)) return false;
  const Spinor3 low = lower_all(upper(psi));
  const Spinor1 a(alpha.components());
  const Complex v =
      contract(low, outer(a, a, a), SlotPair{0, 0}, SlotPair{1, 1}, SlotPair{2, 2})
          .scalar();
  const double scale = psi.norm() * alpha.norm_squared() * alpha.norm();
  return std::abs(v) < kVarietyTol * scale;
}

Spinor3 tangent_osculating_intersection(const Spinor1& alpha,
                                        const Spinor1& beta) {
  require_nonzero(alpha, "zero tangent base point");
  require_nonzero(beta, "zero osculating base point");
  const Spinor1 a = alpha.normalized();
  const Spinor1 b = beta.normalized();
  if (projective_equal(a, b))
    throw Error(ErrorCode::CoincidentPoints,
                "tangent and osculating base points coincide");
  // The tangent line at aaa is spanned by aaa and a^(A a^B b^C).
  const Spinor3 v1 = outer(a, a, a);
  const Spinor3 v2 = symmetrize(outer(a, a, b));
  // Osculating plane at bbb: psi_{ABC} b^A b^B b^C = 0, a linear functional.
  const Spinor3 bbb = outer(b, b, b);
  auto functional = [&](const Spinor3& s) {
    return contract(lower_all(s), bbb, SlotPair{0, 0}, SlotPair{1, 1},
                    SlotPair{2, 2})
        .scalar();
  };
  const Complex f1 = functional(v1);
  const Complex f2 = functional(v2);
  return (v1 * f2 - v2 * f1).normalized();
}

Spinor3 ghz_state(const Spinor1& psi) {
  require_nonzero(psi, "GHZ state of the zero spinor");
  const Spinor1 u = psi.normalized();
  const Spinor1 d = conjugate_state(u);
  return (outer(u, u, u) + outer(d, d, d)) / std::sqrt(2.0);
}

Spinor3 w_state(const Spinor1& psi) {
  require_nonzero(psi, "W state of the zero spinor");
  const Spinor1 u = psi.normalized();
  const Spinor1 d = conjugate_state(u);
  return (outer(u, u, d) + outer(u, d, u) + outer(d, u, u)) / std::sqrt(3.0);
}

Complex hyperdeterminant(const Spinor3& psi) {
  const Complex a000 = psi(0, 0, 0), a001 = psi(0, 0, 1), a010 = psi(0, 1, 0),
                a011 = psi(0, 1, 1), a100 = psi(1, 0, 0), a101 = psi(1, 0, 1),
                a110 = psi(1, 1, 0), a111 = psi(1, 1, 1);
  const Complex d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                     a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
  const Complex d2 =
      a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 +
      a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010 +
      a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
  const Complex d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
  return d1 - 2.0 * d2 + 4.0 * d3;
}

double three_tangle(const Spinor3& psi) {
  const double n = psi.norm_squared();
  if (!(n > kZeroNormSquared))
    throw Error(ErrorCode::ZeroState, "three-tangle of the zero state");
  return std::min(1.0, 4.0 * std::abs(hyperdeterminant(psi)) / (n * n));
}

Complex quartic_H_value(const Spinor3& psi) {
  const Spinor3 p = upper(psi);
  const Spinor2 t =
      contract(lower_index(p, 0), lower_all(p), SlotPair{1, 1}, SlotPair{2, 2});
  return contract(t, raise_all(t), SlotPair{0, 0}, SlotPair{1, 1}).scalar();
}

Spinor3 tangent_plane_form(const Spinor1& alpha, const Spinor1& beta,
                           const Spinor1& gamma, const Spinor1& x,
                           const Spinor1& y, const Spinor1& z) {
  require_nonzero(alpha, "zero base spinor");
  require_nonzero(beta, "zero base spinor");
  require_nonzero(gamma, "zero base spinor");
  return outer(x, beta, gamma) + outer(alpha, y, gamma) + outer(alpha, beta, z);
}

LocalRanks local_ranks(const Spinor3& psi) {
  require_nonzero(psi, "local ranks of the zero state");
  LocalRanks out;
  for (int party = 0; party < 3; ++party) {
    // Gram matrix M M^dagger of the 2x4 flattening.
    double h00 = 0.0, h11 = 0.0;
    Complex h01{};
    for (int c = 0; c < 4; ++c) {
      const Complex m0 = flat_entry(psi, party, 0, c);
      const Complex m1 = flat_entry(psi, party, 1, c);
      h00 += std::norm(m0);
      h11 += std::norm(m1);
      h01 += m0 * std::conj(m1);
    }
    // det(M M^dagger) as a sum of squared 2x2 minors keeps full precision
    // near rank one.
    double det = 0.0;
    for (int j = 0; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        det += std::norm(flat_entry(psi, party, 0, j) * flat_entry(psi, party, 1, k) -
                         flat_entry(psi, party, 0, k) * flat_entry(psi, party, 1, j));
    const double largest =
        0.5 * (h00 + h11 + std::hypot(h00 - h11, 2.0 * std::abs(h01)));
    const double ratio = std::sqrt(det) / largest;  // sigma_2 / sigma_1
    out.singular_ratio[party] = ratio;
    out.ranks[party] = ratio < kRankTol ? 1 : 2;
  }
  return out;
}

std::string_view to_string(SloccLabel label) {
  switch (label) {
    case SloccLabel::Separable: return "Separable";
    case SloccLabel::BisepA: return "BisepA";
    case SloccLabel::BisepB: return "BisepB";
    case SloccLabel::BisepC: return "BisepC";
    case SloccLabel::W: return "W";
    case SloccLabel::GHZ: return "GHZ";
  }
  return "unknown";
}

SloccClass slocc_classify(const Spinor3& psi) {
  require_nonzero(psi, "classification of the zero state");
  const LocalRanks lr = local_ranks(psi);
  const double tau = three_tangle(psi);
  SloccClass out{SloccLabel::Separable, lr.ranks, tau};
  int ones = 0;
  for (int r : lr.ranks) ones += (r == 1);
  switch (ones) {
    case 3:
      out.label = SloccLabel::Separable;
      break;
    case 1:
      out.label = lr.ranks[0] == 1   ? SloccLabel::BisepA
                  : lr.ranks[1] == 1 ? SloccLabel::BisepB
                                     : SloccLabel::BisepC;
      break;
    case 0:
      out.label = tau > kTangleTol ? SloccLabel::GHZ : SloccLabel::W;
      break;
    default:
      throw Error(ErrorCode::NumericalBreakdown,
                  "inconsistent local ranks: two parties rank one, one rank two");
  }
  return out;
}

Complex determinant(const LocalOperator& m) { return m[0] * m[3] - m[1] * m[2]; }

Spinor3 apply_slocc(const Spinor3& psi, const LocalOperators& ops) {
  for (const auto& m : ops) {
    double scale = 0.0;
    for (const auto& z : m) scale = std::max(scale, std::abs(z));
    if (!(std::abs(determinant(m)) > 1e-14 * scale * scale))
      throw Error(ErrorCode::SingularOperator, "local operator is singular");
  }
  Spinor3 out;
  for (std::size_t f = 0; f < 8; ++f) {
    const int a = Spinor3::slot_value(f, 0);
    const int b = Spinor3::slot_value(f, 1);
    const int c = Spinor3::slot_value(f, 2);
    Complex acc{};
    for (std::size_t g = 0; g < 8; ++g) {
      if (psi[g] == Complex{}) continue;
      acc += ops[0][2 * a + Spinor3::slot_value(g, 0)] *
             ops[1][2 * b + Spinor3::slot_value(g, 1)] *
             ops[2][2 * c + Spinor3::slot_value(g, 2)] * psi[g];
    }
    out[f] = acc;
  }
  return out;
}

LocalOperators random_slocc(std::uint64_t seed, bool special) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  LocalOperators ops{};
  for (auto& m : ops) {
    do {
      for (auto& z : m) z = Complex(normal(gen), normal(gen));
    } while (!(std::abs(determinant(m)) > 1e-6));
    if (special) {
      const Complex root = std::sqrt(determinant(m));
      for (auto& z : m) z /= root;
    }
  }
  return ops;
}

}  // namespace qgeom
