// SPDX-License-Identifier: Apache-2.0
//
// Two-spinor algebra on fixed-rank component arrays.
//
// A Spinor<Rank> stores 2^Rank complex components in big-endian order: slot 0
// is the most significant bit of the flat index, so psi^{ABC} lives at
// 4A + 2B + C. Each slot carries a variance flag (upper or lower).
//
// Index conventions:
//   eps^{01} = +1, eps^{10} = -1 (eps_{AB} has the same numbers)
//   lowering:  psi_B = psi^A eps_{AB}
//   raising:   psi^A = eps^{AB} psi_B
// With these, eps^{AB} eps_{CB} = delta^A_C and raise(lower(x)) == x exactly.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>

#include "qgeom/error.hpp"

namespace qgeom {

using Complex = std::complex<double>;

inline constexpr double kDefaultProjectiveTol = 1e-9;

// Squared norms at or below this are treated as the zero spinor.
inline constexpr double kZeroNormSquared = 1e-280;

template <std::size_t Rank>
class Spinor {
  static_assert(Rank <= 6, "contractions of two rank-3 spinors top out at rank 6");

 public:
  static constexpr std::size_t kRank = Rank;
  static constexpr std::size_t kSize = std::size_t{1} << Rank;
  using Components = std::array<Complex, kSize>;

  Spinor() { c_.fill(Complex{}); }

  explicit Spinor(const Components& c, std::uint8_t lowered_mask = 0)
      : c_(c), lowered_(lowered_mask) {}

  template <class... Ts>
    requires(sizeof...(Ts) == kSize && kSize > 1 &&
             (std::is_convertible_v<Ts, Complex> && ...))
  Spinor(Ts... values) : c_{Complex(values)...} {}

  // Flat position of the component with the given index values.
  static constexpr std::size_t flat_index(const std::array<int, Rank>& idx) {
    std::size_t flat = 0;
    for (std::size_t s = 0; s < Rank; ++s) flat = (flat << 1) | (idx[s] & 1);
    return flat;
  }

  // Value (0 or 1) of `slot` inside a flat index.
  static constexpr int slot_value(std::size_t flat, std::size_t slot) {
    return static_cast<int>((flat >> (Rank - 1 - slot)) & 1u);
  }

  Complex& operator[](std::size_t flat) { return c_[flat]; }
  const Complex& operator[](std::size_t flat) const { return c_[flat]; }

  template <class... I>
    requires(sizeof...(I) == Rank)
  Complex& operator()(I... idx) {
    return c_[flat_index({static_cast<int>(idx)...})];
  }
  template <class... I>
    requires(sizeof...(I) == Rank)
  const Complex& operator()(I... idx) const {
    return c_[flat_index({static_cast<int>(idx)...})];
  }

  const Components& components() const { return c_; }
  std::span<const Complex, kSize> view() const { return c_; }

  std::uint8_t lowered_mask() const { return lowered_; }
  bool is_lowered(std::size_t slot) const { return (lowered_ >> slot) & 1u; }
  void set_lowered(std::size_t slot, bool lowered) {
    if (lowered)
      lowered_ = static_cast<std::uint8_t>(lowered_ | (1u << slot));
    else
      lowered_ = static_cast<std::uint8_t>(lowered_ & ~(1u << slot));
  }

  double norm_squared() const {
    double n = 0.0;
    for (const auto& z : c_) n += std::norm(z);
    return n;
  }
  double norm() const { return std::sqrt(norm_squared()); }
  bool is_zero() const { return !(norm_squared() > kZeroNormSquared); }

  bool is_finite() const {
    return std::all_of(c_.begin(), c_.end(), [](const Complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  Spinor normalized() const {
    const double n = norm();
    if (!(n * n > kZeroNormSquared))
      throw Error(ErrorCode::ZeroState, "cannot normalize the zero spinor");
    return *this / n;
  }

  // Only meaningful for Rank == 0.
  Complex scalar() const
    requires(Rank == 0)
  {
    return c_[0];
  }

  Spinor& operator+=(const Spinor& o) {
    for (std::size_t i = 0; i < kSize; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Spinor& operator-=(const Spinor& o) {
    for (std::size_t i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Spinor& operator*=(Complex s) {
    for (auto& z : c_) z *= s;
    return *this;
  }
  Spinor& operator/=(Complex s) {
    for (auto& z : c_) z /= s;
    return *this;
  }

  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator-(Spinor a) { return a *= -1.0; }
  friend Spinor operator*(Spinor a, Complex s) { return a *= s; }
  friend Spinor operator*(Complex s, Spinor a) { return a *= s; }
  friend Spinor operator/(Spinor a, Complex s) { return a /= s; }

 private:
  Components c_;
  std::uint8_t lowered_ = 0;
};

using Spinor1 = Spinor<1>;
using Spinor2 = Spinor<2>;
using Spinor3 = Spinor<3>;

// eps^{AB}, both slots upper.
inline Spinor2 epsilon_upper() { return Spinor2{0.0, 1.0, -1.0, 0.0}; }

// eps_{AB}: numerically identical, both slots lower.
inline Spinor2 epsilon_lower() {
  return Spinor2(epsilon_upper().components(), 0b11);
}

namespace detail {

template <std::size_t Rank>
void check_slot(std::size_t slot) {
  if (slot >= Rank)
    throw Error(ErrorCode::InvalidArgument,
                "slot " + std::to_string(slot) + " out of range for rank " +
                    std::to_string(Rank));
}

}  // namespace detail

// psi_{..B..} = psi^{..A..} eps_{AB} on `slot`.
template <std::size_t Rank>
Spinor<Rank> lower_index(const Spinor<Rank>& s, std::size_t slot) {
  detail::check_slot<Rank>(slot);
  if (s.is_lowered(slot))
    throw Error(ErrorCode::VarianceMismatch, "slot is already lowered");
  Spinor<Rank> out = s;
  const std::size_t bit = std::size_t{1} << (Rank - 1 - slot);
  for (std::size_t f = 0; f < Spinor<Rank>::kSize; ++f) {
    if (f & bit) continue;
    // B = 0 picks up A = 1 with eps_{10} = -1; B = 1 picks up A = 0.
    out[f] = -s[f | bit];
    out[f | bit] = s[f];
  }
  out.set_lowered(slot, true);
  return out;
}

// psi^A = eps^{AB} psi_B on `slot`.
template <std::size_t Rank>
Spinor<Rank> raise_index(const Spinor<Rank>& s, std::size_t slot) {
  detail::check_slot<Rank>(slot);
  if (!s.is_lowered(slot))
    throw Error(ErrorCode::VarianceMismatch, "slot is already raised");
  Spinor<Rank> out = s;
  const std::size_t bit = std::size_t{1} << (Rank - 1 - slot);
  for (std::size_t f = 0; f < Spinor<Rank>::kSize; ++f) {
    if (f & bit) continue;
    out[f] = s[f | bit];
    out[f | bit] = -s[f];
  }
  out.set_lowered(slot, false);
  return out;
}

template <std::size_t Rank>
Spinor<Rank> lower_all(Spinor<Rank> s) {
  for (std::size_t slot = 0; slot < Rank; ++slot)
    if (!s.is_lowered(slot)) s = lower_index(s, slot);
  return s;
}

template <std::size_t Rank>
Spinor<Rank> raise_all(Spinor<Rank> s) {
  for (std::size_t slot = 0; slot < Rank; ++slot)
    if (s.is_lowered(slot)) s = raise_index(s, slot);
  return s;
}

struct SlotPair {
  std::size_t first;   // slot of the left operand
  std::size_t second;  // slot of the right operand
};

// Einstein sum over each paired (left, right) slot. Free slots of the left
// operand come first in the result, followed by the free slots of the right.
template <std::size_t R1, std::size_t R2, class... Pairs>
  requires(std::is_same_v<Pairs, SlotPair> && ...)
auto contract(const Spinor<R1>& s, const Spinor<R2>& t, Pairs... pairs) {
  constexpr std::size_t kPairs = sizeof...(Pairs);
  static_assert(2 * kPairs <= R1 + R2);
  static_assert(kPairs <= R1 && kPairs <= R2, "more pairs than slots");
  constexpr std::size_t kOut = R1 + R2 - 2 * kPairs;
  const std::array<SlotPair, kPairs> ps{pairs...};

  std::array<bool, R1> used_s{};
  std::array<bool, R2> used_t{};
  for (const auto& p : ps) {
    if (p.first >= R1 || p.second >= R2)
      throw Error(ErrorCode::RankMismatch, "contraction slot out of range");
    if (used_s[p.first] || used_t[p.second])
      throw Error(ErrorCode::InvalidArgument, "slot paired twice");
    if (s.is_lowered(p.first) == t.is_lowered(p.second))
      throw Error(ErrorCode::VarianceMismatch,
                  "contracted slots must have opposite variance");
    used_s[p.first] = true;
    used_t[p.second] = true;
  }

  // Free slots in output order, tagged by operand.
  std::array<std::pair<int, std::size_t>, (kOut > 0 ? kOut : 1)> free{};
  std::uint8_t out_mask = 0;
  std::size_t k = 0;
  for (std::size_t a = 0; a < R1; ++a)
    if (!used_s[a]) {
      if (s.is_lowered(a)) out_mask |= static_cast<std::uint8_t>(1u << k);
      free[k++] = {0, a};
    }
  for (std::size_t b = 0; b < R2; ++b)
    if (!used_t[b]) {
      if (t.is_lowered(b)) out_mask |= static_cast<std::uint8_t>(1u << k);
      free[k++] = {1, b};
    }

  Spinor<kOut> out;
  for (std::size_t fs = 0; fs < Spinor<R1>::kSize; ++fs) {
    if (s[fs] == Complex{}) continue;
    for (std::size_t ft = 0; ft < Spinor<R2>::kSize; ++ft) {
      bool match = true;
      for (const auto& p : ps)
        if (Spinor<R1>::slot_value(fs, p.first) !=
            Spinor<R2>::slot_value(ft, p.second)) {
          match = false;
          break;
        }
      if (!match) continue;
      std::size_t fo = 0;
      for (std::size_t j = 0; j < kOut; ++j) {
        const int v = free[j].first == 0
                          ? Spinor<R1>::slot_value(fs, free[j].second)
                          : Spinor<R2>::slot_value(ft, free[j].second);
        fo = (fo << 1) | static_cast<std::size_t>(v);
      }
      out[fo] += s[fs] * t[ft];
    }
  }
  return Spinor<kOut>(out.components(), out_mask);
}

// Tensor product s^{A..} t^{B..}.
template <std::size_t R1, std::size_t R2>
Spinor<R1 + R2> outer(const Spinor<R1>& s, const Spinor<R2>& t) {
  Spinor<R1 + R2> out;
  for (std::size_t a = 0; a < Spinor<R1>::kSize; ++a)
    for (std::size_t b = 0; b < Spinor<R2>::kSize; ++b)
      out[(a << R2) | b] = s[a] * t[b];
  const auto mask = static_cast<std::uint8_t>(s.lowered_mask() |
                                              (t.lowered_mask() << R1));
  return Spinor<R1 + R2>(out.components(), mask);
}

inline Spinor3 outer(const Spinor1& a, const Spinor1& b, const Spinor1& c) {
  return outer(outer(a, b), c);
}

// Component of `s` with its slots permuted: result(i_0..i_{R-1}) =
// s(i_{perm[0]}..i_{perm[R-1]}).
template <std::size_t Rank>
Spinor<Rank> permute_slots(const Spinor<Rank>& s,
                           const std::array<std::size_t, Rank>& perm) {
  Spinor<Rank> out(s.components(), s.lowered_mask());
  for (std::size_t f = 0; f < Spinor<Rank>::kSize; ++f) {
    std::size_t src = 0;
    for (std::size_t j = 0; j < Rank; ++j)
      src = (src << 1) |
            static_cast<std::size_t>(Spinor<Rank>::slot_value(f, perm[j]));
    out[f] = s[src];
  }
  return out;
}

// Average over all Rank! slot permutations.
template <std::size_t Rank>
Spinor<Rank> symmetrize(const Spinor<Rank>& s) {
  std::array<std::size_t, Rank> perm{};
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Spinor<Rank> acc(typename Spinor<Rank>::Components{}, s.lowered_mask());
  std::size_t count = 0;
  do {
    acc += permute_slots(s, perm);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / static_cast<double>(count);
}

// Hermitian product, conjugate-linear in the first argument.
template <std::size_t Rank>
Complex inner_product(const Spinor<Rank>& p, const Spinor<Rank>& q) {
  Complex acc{};
  for (std::size_t i = 0; i < Spinor<Rank>::kSize; ++i)
    acc += std::conj(p[i]) * q[i];
  return acc;
}

// |<p,q>|^2 / (<p,p><q,q>), clamped to [0, 1].
template <std::size_t Rank>
double normalized_overlap(const Spinor<Rank>& p, const Spinor<Rank>& q) {
  const double np = p.norm_squared();
  const double nq = q.norm_squared();
  if (!(np > kZeroNormSquared) || !(nq > kZeroNormSquared))
    throw Error(ErrorCode::ZeroState, "overlap of a zero spinor");
  const double r = std::norm(inner_product(p, q)) / (np * nq);
  return std::clamp(r, 0.0, 1.0);
}

// Antipodal state (a, b) -> (-conj(b), conj(a)).
Spinor1 conjugate_state(const Spinor1& s);

template <std::size_t Rank>
bool projective_equal(const Spinor<Rank>& p, const Spinor<Rank>& q,
                      double tol = kDefaultProjectiveTol) {
  const double np = p.norm_squared();
  const double nq = q.norm_squared();
  if (!(np > kZeroNormSquared) || !(nq > kZeroNormSquared))
    throw Error(ErrorCode::ZeroState, "projective comparison of a zero spinor");
  return std::norm(inner_product(p, q)) >= (1.0 - tol) * np * nq;
}

// A ray: nonzero representative plus the tolerance used for equality.
template <std::size_t Rank>
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const Spinor<Rank>& rep,
                           double tol = kDefaultProjectiveTol)
      : rep_(rep), tol_(tol) {
    if (rep.is_zero())
      throw Error(ErrorCode::ZeroState, "projective point needs a nonzero rep");
    if (!rep.is_finite())
      throw Error(ErrorCode::InvalidArgument, "non-finite amplitude");
    if (!(tol >= 0.0 && tol < 1.0))
      throw Error(ErrorCode::InvalidArgument, "tolerance must lie in [0, 1)");
  }

  const Spinor<Rank>& rep() const { return rep_; }
  double tol() const { return tol_; }
  Spinor<Rank> unit() const { return rep_.normalized(); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return projective_equal(a.rep_, b.rep_, std::max(a.tol_, b.tol_));
  }

 private:
  Spinor<Rank> rep_;
  double tol_;
};

// Unit spinor with independent standard complex normal components; the
// resulting distribution on the sphere is unitarily invariant.
template <std::size_t Rank>
Spinor<Rank> random_spinor(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  for (;;) {
    Spinor<Rank> s;
    for (std::size_t i = 0; i < Spinor<Rank>::kSize; ++i)
      s[i] = Complex(normal(gen), normal(gen));
    if (!s.is_zero()) return s.normalized();
  }
}

}  // namespace qgeom
