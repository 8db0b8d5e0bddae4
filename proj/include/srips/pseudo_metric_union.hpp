#pragma once

#include <utility>
#include <vector>

#include "srips/metric.hpp"

namespace srips {

enum class Side { left, right };

using Correspondence = std::vector<std::pair<Index, Index>>;

// A pseudo-metric on the disjoint union of two finite metric spaces that
// restricts to the given metric on each side. Union indices run over
// [0, |left|) for the left side followed by [|left|, |left| + |right|).
//
// Two storage modes:
//   dense   - an explicit |left| x |right| table of cross distances, produced
//             by glue() and validated on construction;
//   ambient - both sides are point clouds in the same R^d and
//             d'(x, y) = |x - y| + offset. This is a metric by construction
//             and scales to point clouds far too large for a table.
class PseudoMetricUnion {
 public:
  static PseudoMetricUnion from_cross(FiniteMetricSpace left, FiniteMetricSpace right,
                                      std::vector<double> cross, double declared_bound,
                                      double triangle_tolerance = defaults::kTriangleTolerance);
  static PseudoMetricUnion ambient(FiniteMetricSpace left, FiniteMetricSpace right,
                                   double offset = 0.0);

  const FiniteMetricSpace& left() const noexcept { return left_; }
  const FiniteMetricSpace& right() const noexcept { return right_; }
  const FiniteMetricSpace& side(Side s) const noexcept { return s == Side::left ? left_ : right_; }
  std::size_t size() const noexcept { return left_.size() + right_.size(); }

  bool is_ambient() const noexcept { return ambient_; }
  double ambient_offset() const noexcept { return offset_; }

  // Every point lies within this distance (non-strict) of the other side.
  double declared_bound() const noexcept { return declared_bound_; }

  double cross(Index l, Index r) const noexcept {
    if (ambient_)
      return detail::euclidean_distance(left_.point(l).data(), right_.point(r).data(),
                                        left_.coordinate_dim()) +
             offset_;
    return cross_[static_cast<std::size_t>(l) * right_.size() + r];
  }

  // Distance between union indices.
  double operator()(Index u, Index v) const noexcept {
    const auto nl = static_cast<Index>(left_.size());
    if (u < nl && v < nl) return left_(u, v);
    if (u >= nl && v >= nl) return right_(u - nl, v - nl);
    if (u < nl) return cross(u, v - nl);
    return cross(v, u - nl);
  }

  // Distance from a point p of the left side's ambient R^d (not necessarily a
  // sample point) to right point j. Ambient mode measures directly; dense
  // mode extends through the left sample: min_q |p - q| + cross(q, j).
  double point_to_right(std::span<const double> p, Index j) const;

  // visit(j, d) for right points j with cross(l, j) < r.
  template <class Visit>
  void for_each_right_within(Index l, double r, Visit&& visit) const {
    if (ambient_) {
      const double reach = r - offset_;
      if (reach <= 0.0) return;
      right_.for_each_within_point(left_.point(l), reach, [&](Index j, double d) {
        return visit(j, d + offset_);
      });
      return;
    }
    for (Index j = 0; j < right_.size(); ++j) {
      const double d = cross(l, j);
      if (d < r && !visit(j, d)) return;
    }
  }

  // visit(j, d) for right points j with point_to_right(p, j) < r.
  template <class Visit>
  void for_each_right_within_point(std::span<const double> p, double r, Visit&& visit) const {
    if (ambient_) {
      const double reach = r - offset_;
      if (reach <= 0.0) return;
      right_.for_each_within_point(p, reach, [&](Index j, double d) { return visit(j, d + offset_); });
      return;
    }
    for (Index j = 0; j < right_.size(); ++j) {
      const double d = point_to_right(p, j);
      if (d < r && !visit(j, d)) return;
    }
  }

  // Smallest cross distance from left point l (resp. right point r) to the
  // other side.
  double nearest_right_distance(Index l) const;
  double nearest_left_distance(Index r) const;

 private:
  PseudoMetricUnion() = default;

  FiniteMetricSpace left_;
  FiniteMetricSpace right_;
  std::vector<double> cross_;
  bool ambient_ = false;
  double offset_ = 0.0;
  double declared_bound_ = 0.0;
};

// max over pairs of pairs |d_L(x, x') - d_R(y, y')|.
double distortion(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                  const Correspondence& correspondence);

// Pseudo-metric gluing along a correspondence:
//   cross(x, y) = min over (a, b) of d_L(x, a) + slack + d_R(b, y).
// Requires a correspondence touching every point of both sides and
// slack >= distortion / 2. declared_bound is the slack: every point is within
// `slack` of its partner.
PseudoMetricUnion glue(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                       const Correspondence& correspondence, double slack,
                       double triangle_tolerance = defaults::kTriangleTolerance);

// Pairs every point with its nearest point on the other side, measured in the
// shared coordinate model (both spaces must be coordinate-backed of the same
// kind and dimension). Lowest index wins ties.
Correspondence nearest_correspondence(const FiniteMetricSpace& left, const FiniteMetricSpace& right);

Correspondence identity_correspondence(std::size_t n);

// Hausdorff distance between the two sides measured inside the union; an
// upper bound on their Gromov-Hausdorff distance.
double gh_upper_bound(const PseudoMetricUnion& u);

}  // namespace srips
