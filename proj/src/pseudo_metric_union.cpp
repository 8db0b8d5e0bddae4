#include "srips/pseudo_metric_union.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace srips {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_union(const PseudoMetricUnion& u, double tol) {
  const auto n = static_cast<Index>(u.size());
  const auto nl = static_cast<Index>(u.left().size());
  for (Index l = 0; l < nl; ++l) {
    for (Index r = 0; r < u.right().size(); ++r) {
      const double c = u.cross(l, r);
      if (!std::isfinite(c) || c < 0.0)
        throw ValidationError("cross distance must be finite and non-negative",
                              {l, static_cast<Index>(r + nl)});
    }
  }
  // Same-side triples are covered by the validated side metrics.
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      const double direct = u(i, k);
      for (Index j = 0; j < n; ++j) {
        const bool same_side = (i < nl) == (k < nl) && (k < nl) == (j < nl);
        if (same_side) continue;
        if (direct > u(i, j) + u(j, k) + tol)
          throw ValidationError("glued pseudo-metric violates the triangle inequality at (" +
                                    std::to_string(i) + "," + std::to_string(k) + "," +
                                    std::to_string(j) + ")",
                                {i, k, j});
      }
    }
  }
}

double coordinate_distance(const FiniteMetricSpace& a, Index i, const FiniteMetricSpace& b, Index j) {
  const auto p = a.point(i);
  const auto q = b.point(j);
  switch (a.kind()) {
    case MetricKind::euclidean:
      return detail::euclidean_distance(p.data(), q.data(), a.coordinate_dim());
    case MetricKind::circle_geodesic: {
      const double delta = std::fabs(p[0] - q[0]);
      return a.circle_radius() * std::min(delta, 2.0 * std::numbers::pi - delta);
    }
    case MetricKind::flat_torus: {
      double sum = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        const double delta = std::fabs(p[k] - q[k]);
        const double w = std::min(delta, a.torus_sides()[k] - delta);
        sum += w * w;
      }
      return std::sqrt(sum);
    }
    case MetricKind::matrix:
      break;
  }
  throw PreconditionError("nearest correspondence needs coordinate-backed spaces");
}

}  // namespace

PseudoMetricUnion PseudoMetricUnion::from_cross(FiniteMetricSpace left, FiniteMetricSpace right,
                                                std::vector<double> cross, double declared_bound,
                                                double tol) {
  if (left.empty() || right.empty()) throw PreconditionError("both sides must be non-empty");
  if (cross.size() != left.size() * right.size())
    throw ValidationError("cross table has the wrong size");
  PseudoMetricUnion u;
  u.left_ = std::move(left);
  u.right_ = std::move(right);
  u.cross_ = std::move(cross);
  u.declared_bound_ = declared_bound;
  validate_union(u, tol);
  for (Index l = 0; l < u.left_.size(); ++l)
    if (u.nearest_right_distance(l) > declared_bound)
      throw ValidationError("left point farther than the declared bound from the right side", {l});
  for (Index r = 0; r < u.right_.size(); ++r)
    if (u.nearest_left_distance(r) > declared_bound)
      throw ValidationError("right point farther than the declared bound from the left side",
                            {static_cast<Index>(r + u.left_.size())});
  return u;
}

PseudoMetricUnion PseudoMetricUnion::ambient(FiniteMetricSpace left, FiniteMetricSpace right,
                                             double offset) {
  if (left.empty() || right.empty()) throw PreconditionError("both sides must be non-empty");
  if (left.kind() != MetricKind::euclidean || right.kind() != MetricKind::euclidean ||
      left.coordinate_dim() != right.coordinate_dim())
    throw PreconditionError("ambient gluing needs two euclidean spaces of equal dimension");
  if (!(offset >= 0.0) || !std::isfinite(offset))
    throw PreconditionError("ambient offset must be finite and non-negative");
  PseudoMetricUnion u;
  u.left_ = std::move(left);
  u.right_ = std::move(right);
  u.ambient_ = true;
  u.offset_ = offset;
  double bound = 0.0;
  for (Index l = 0; l < u.left_.size(); ++l) bound = std::max(bound, u.nearest_right_distance(l));
  for (Index r = 0; r < u.right_.size(); ++r) bound = std::max(bound, u.nearest_left_distance(r));
  u.declared_bound_ = bound;
  return u;
}

double PseudoMetricUnion::point_to_right(std::span<const double> p, Index j) const {
  if (ambient_) return right_.distance_to_point(p, j) + offset_;
  double best = kInf;
  for (Index q = 0; q < left_.size(); ++q) best = std::min(best, left_.distance_to_point(p, q) + cross(q, j));
  return best;
}

namespace {

// Nearest point of `cloud` to ambient point p by doubling the search radius.
double nearest_in_cloud(const FiniteMetricSpace& cloud, std::span<const double> p) {
  double radius = 1e-6;
  for (int attempt = 0; attempt < 80; ++attempt) {
    double best = kInf;
    cloud.for_each_within_point(p, radius, [&](Index, double d) {
      best = std::min(best, d);
      return true;
    });
    if (best < kInf) return best;
    radius *= 2.0;
  }
  double best = kInf;
  for (Index j = 0; j < cloud.size(); ++j) best = std::min(best, cloud.distance_to_point(p, j));
  return best;
}

}  // namespace

double PseudoMetricUnion::nearest_right_distance(Index l) const {
  if (ambient_) return nearest_in_cloud(right_, left_.point(l)) + offset_;
  double best = kInf;
  for (Index r = 0; r < right_.size(); ++r) best = std::min(best, cross(l, r));
  return best;
}

double PseudoMetricUnion::nearest_left_distance(Index r) const {
  if (ambient_) return nearest_in_cloud(left_, right_.point(r)) + offset_;
  double best = kInf;
  for (Index l = 0; l < left_.size(); ++l) best = std::min(best, cross(l, r));
  return best;
}

double distortion(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                  const Correspondence& correspondence) {
  double worst = 0.0;
  for (const auto& [x, y] : correspondence)
    for (const auto& [xp, yp] : correspondence)
      worst = std::max(worst, std::fabs(left(x, xp) - right(y, yp)));
  return worst;
}

PseudoMetricUnion glue(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                       const Correspondence& correspondence, double slack, double tol) {
  if (left.empty() || right.empty()) throw PreconditionError("both sides must be non-empty");
  std::vector<char> seen_left(left.size(), 0);
  std::vector<char> seen_right(right.size(), 0);
  for (const auto& [x, y] : correspondence) {
    if (x >= left.size() || y >= right.size())
      throw PreconditionError("correspondence index out of range");
    seen_left[x] = 1;
    seen_right[y] = 1;
  }
  for (Index x = 0; x < left.size(); ++x)
    if (!seen_left[x])
      throw PreconditionError("correspondence does not cover left point " + std::to_string(x));
  for (Index y = 0; y < right.size(); ++y)
    if (!seen_right[y])
      throw PreconditionError("correspondence does not cover right point " + std::to_string(y));
  if (!(slack >= 0.0) || !std::isfinite(slack)) throw PreconditionError("slack must be >= 0");
  const double half_distortion = distortion(left, right, correspondence) / 2.0;
  if (slack < half_distortion)
    throw PreconditionError("slack " + std::to_string(slack) + " is below half the distortion " +
                            std::to_string(half_distortion));

  const std::size_t nl = left.size();
  const std::size_t nr = right.size();
  std::vector<double> cross(nl * nr, kInf);
  for (const auto& [a, b] : correspondence) {
    for (Index x = 0; x < nl; ++x) {
      const double head = left(x, a) + slack;
      double* row = &cross[x * nr];
      for (Index y = 0; y < nr; ++y) row[y] = std::min(row[y], head + right(b, y));
    }
  }
  return PseudoMetricUnion::from_cross(left, right, std::move(cross), slack, tol);
}

Correspondence nearest_correspondence(const FiniteMetricSpace& left, const FiniteMetricSpace& right) {
  if (left.kind() != right.kind() || left.kind() == MetricKind::matrix ||
      left.coordinate_dim() != right.coordinate_dim())
    throw PreconditionError("nearest correspondence needs two coordinate spaces of the same model");
  Correspondence out;
  for (Index x = 0; x < left.size(); ++x) {
    Index best = 0;
    double best_d = kInf;
    for (Index y = 0; y < right.size(); ++y) {
      const double d = coordinate_distance(left, x, right, y);
      if (d < best_d) {
        best_d = d;
        best = y;
      }
    }
    out.emplace_back(x, best);
  }
  for (Index y = 0; y < right.size(); ++y) {
    Index best = 0;
    double best_d = kInf;
    for (Index x = 0; x < left.size(); ++x) {
      const double d = coordinate_distance(left, x, right, y);
      if (d < best_d) {
        best_d = d;
        best = x;
      }
    }
    out.emplace_back(best, y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Correspondence identity_correspondence(std::size_t n) {
  Correspondence out;
  out.reserve(n);
  for (Index i = 0; i < n; ++i) out.emplace_back(i, i);
  return out;
}

double gh_upper_bound(const PseudoMetricUnion& u) {
  double worst = 0.0;
  for (Index l = 0; l < u.left().size(); ++l) worst = std::max(worst, u.nearest_right_distance(l));
  for (Index r = 0; r < u.right().size(); ++r) worst = std::max(worst, u.nearest_left_distance(r));
  return worst;
}

}  // namespace srips
