// SPDX-License-Identifier: Apache-2.0
//
// Fubini-Study geometry on rays, projective lines, Hermitian hyperplanes and
// the line/quadric intersection solver.
#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "qgeom/spinor.hpp"

namespace qgeom {

// Geodesic angle theta in [0, pi] with cos^2(theta/2) equal to the
// transition probability. Evaluated as 2*atan2(|perp|, |parallel|) so small
// separations keep full relative precision.
template <std::size_t Rank>
double fs_distance(const Spinor<Rank>& p, const Spinor<Rank>& q) {
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorCode::ZeroState, "distance to a zero spinor");
  const Spinor<Rank> pu = p.normalized();
  const Spinor<Rank> qu = q.normalized();
  const Complex along = inner_product(pu, qu);
  const double perp = (qu - pu * along).norm();
  return 2.0 * std::atan2(perp, std::abs(along));
}

template <std::size_t Rank>
double fs_distance(const ProjectivePoint<Rank>& p,
                   const ProjectivePoint<Rank>& q) {
  return fs_distance(p.rep(), q.rep());
}

template <std::size_t Rank>
double transition_probability(const Spinor<Rank>& p, const Spinor<Rank>& q) {
  return normalized_overlap(p, q);
}

template <std::size_t Rank>
double transition_probability(const ProjectivePoint<Rank>& p,
                              const ProjectivePoint<Rank>& q) {
  return normalized_overlap(p.rep(), q.rep());
}

// Line element ds^2 at p in direction dp:
//   4 (<p,p><dp,dp> - |<p,dp>|^2) / <p,p>^2
template <std::size_t Rank>
double fs_line_element(const Spinor<Rank>& p, const Spinor<Rank>& dp) {
  const double pp = p.norm_squared();
  if (!(pp > kZeroNormSquared))
    throw Error(ErrorCode::ZeroState, "line element at the zero spinor");
  const double num = pp * dp.norm_squared() - std::norm(inner_product(p, dp));
  return 4.0 * std::max(num, 0.0) / (pp * pp);
}

struct MetricCheck {
  double distance_squared;  // fs_distance(p - h dp/2, p + h dp/2)^2
  double line_element;      // h^2 ds^2(p, dp)
  double relative_error;
};

// Compares the squared geodesic distance across a step of length h against
// the line element. The step is centred on p, so the first-order bias of a
// one-sided step cancels and the residual is O(h^2).
template <std::size_t Rank>
MetricCheck metric_finite_difference_check(const Spinor<Rank>& p,
                                           const Spinor<Rank>& dp, double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw Error(ErrorCode::InvalidArgument, "step h must be positive");
  if (p.is_zero()) throw Error(ErrorCode::ZeroState, "base point is zero");
  MetricCheck r{};
  const double theta = fs_distance(p - dp * (0.5 * h), p + dp * (0.5 * h));
  r.distance_squared = theta * theta;
  r.line_element = h * h * fs_line_element(p, dp);
  // Pure-gauge directions have zero length; measure against the raw size of
  // the step so the check still reports something meaningful.
  const double gauge_scale =
      4.0 * h * h * dp.norm_squared() / p.norm_squared();
  const double denom = r.line_element > 1e-14 * gauge_scale
                           ? r.line_element
                           : std::max(gauge_scale, kZeroNormSquared);
  r.relative_error = std::abs(r.distance_squared - r.line_element) / denom;
  return r;
}

// Points a*p + b*q for (a : b) in P^1.
template <std::size_t Rank>
class ProjectiveLine {
 public:
  ProjectiveLine(const Spinor<Rank>& p, const Spinor<Rank>& q,
                 double tol = kDefaultProjectiveTol)
      : p_(ProjectivePoint<Rank>(p, tol).unit()),
        q_(ProjectivePoint<Rank>(q, tol).unit()) {
    if (projective_equal(p_, q_, tol))
      throw Error(ErrorCode::DegenerateLine,
                  "line endpoints are projectively equal");
  }

  const Spinor<Rank>& p() const { return p_; }
  const Spinor<Rank>& q() const { return q_; }

  Spinor<Rank> point(Complex a, Complex b) const { return p_ * a + q_ * b; }

  // Relative distance of x from the span of the endpoints.
  double residual(const Spinor<Rank>& x) const {
    // Gram-Schmidt against the (not necessarily orthogonal) endpoints.
    const Spinor<Rank> e1 = p_;
    Spinor<Rank> e2 = q_ - e1 * inner_product(e1, q_);
    e2 = e2.normalized();
    const Spinor<Rank> r =
        x - e1 * inner_product(e1, x) - e2 * inner_product(e2, x);
    return r.norm() / x.norm();
  }

  bool contains(const Spinor<Rank>& x, double tol = kDefaultProjectiveTol) const {
    if (x.is_zero()) throw Error(ErrorCode::ZeroState, "zero spinor");
    return residual(x) < tol;
  }

 private:
  Spinor<Rank> p_;
  Spinor<Rank> q_;
};

// Set of states with vanishing Hermitian overlap with a fixed covector.
template <std::size_t Rank>
class Hyperplane {
 public:
  explicit Hyperplane(const Spinor<Rank>& covector) : covector_(covector) {
    if (covector.is_zero())
      throw Error(ErrorCode::ZeroState, "hyperplane covector is zero");
  }

  const Spinor<Rank>& covector() const { return covector_; }

  // Pairing sum_i covector_i x_i.
  Complex evaluate(const Spinor<Rank>& x) const {
    Complex acc{};
    for (std::size_t i = 0; i < Spinor<Rank>::kSize; ++i)
      acc += covector_[i] * x[i];
    return acc;
  }

  bool contains(const Spinor<Rank>& x, double tol = 1e-10) const {
    if (x.is_zero()) throw Error(ErrorCode::ZeroState, "zero spinor");
    return std::abs(evaluate(x)) <= tol * covector_.norm() * x.norm();
  }

 private:
  Spinor<Rank> covector_;
};

// The point/hyperplane Hermitian correspondence: p -> {x : <p, x> = 0}.
template <std::size_t Rank>
Hyperplane<Rank> hermitian_hyperplane(const Spinor<Rank>& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroState, "zero spinor");
  Spinor<Rank> cov;
  for (std::size_t i = 0; i < Spinor<Rank>::kSize; ++i) cov[i] = std::conj(p[i]);
  return Hyperplane<Rank>(cov);
}

// Complex symmetric bilinear form B(x, y) = sum_ij x_i M_ij y_j.
template <std::size_t Rank>
class SymmetricForm {
 public:
  static constexpr std::size_t kDim = Spinor<Rank>::kSize;
  using Matrix = std::array<Complex, kDim * kDim>;

  explicit SymmetricForm(const Matrix& m) : m_(m) {
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (std::abs(m_[i * kDim + j] - m_[j * kDim + i]) > 1e-14)
          throw Error(ErrorCode::InvalidArgument, "form is not symmetric");
  }

  Complex operator()(const Spinor<Rank>& x, const Spinor<Rank>& y) const {
    Complex acc{};
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) acc += x[i] * m_[i * kDim + j] * y[j];
    return acc;
  }

  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

// Restriction of a quadric to a line: q_pp a^2 + 2 q_pq a b + q_qq b^2.
struct QuadraticFormOnLine {
  Complex q_pp;
  Complex q_pq;
  Complex q_qq;
};

template <std::size_t Rank>
struct LineQuadricIntersection {
  std::array<Spinor<Rank>, 2> points;
  std::array<std::array<Complex, 2>, 2> coordinates;  // (a, b) on the line
  bool tangent = false;
};

inline constexpr double kTangencyTol = 1e-12;

// Roots (a : b) of the homogeneous quadratic. Uses the cancellation-free
// pairing root1 = (s : q_pp), root2 = (q_qq : s) with s = -(q_pq + sigma
// sqrt(disc)) and sigma chosen so |s| is maximal.
struct HomogeneousRoots {
  std::array<std::array<Complex, 2>, 2> roots;
  bool double_root = false;
};

// `reference` is the magnitude below which all three coefficients count as
// zero, meaning the whole line lies on the quadric.
HomogeneousRoots solve_homogeneous_quadratic(const QuadraticFormOnLine& f,
                                             double reference = 1.0);

template <std::size_t Rank>
QuadraticFormOnLine restrict_to_line(const SymmetricForm<Rank>& form,
                                     const ProjectiveLine<Rank>& line) {
  return {form(line.p(), line.p()), form(line.p(), line.q()),
          form(line.q(), line.q())};
}

template <std::size_t Rank>
LineQuadricIntersection<Rank> line_quadric_intersect(
    const ProjectiveLine<Rank>& line, const SymmetricForm<Rank>& form) {
  const QuadraticFormOnLine f = restrict_to_line(form, line);
  double reference = 0.0;
  for (const auto& m : form.matrix()) reference = std::max(reference, std::abs(m));
  const HomogeneousRoots roots = solve_homogeneous_quadratic(f, reference);
  LineQuadricIntersection<Rank> out;
  out.tangent = roots.double_root;
  for (std::size_t k = 0; k < 2; ++k) {
    out.coordinates[k] = roots.roots[k];
    out.points[k] = line.point(roots.roots[k][0], roots.roots[k][1]).normalized();
  }
  return out;
}

}  // namespace qgeom
