#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srips/defaults.hpp"
#include "srips/detail/grid_index.hpp"
#include "srips/types.hpp"

namespace srips {

// How distances of a FiniteMetricSpace are produced.
//  matrix          - stored n x n table, validated on construction
//  euclidean       - coordinates in R^d, distances computed on demand
//  circle_geodesic - angles on a circle of given radius, arc-length distance
//  flat_torus      - coordinates in a box with periodic identification
enum class MetricKind { matrix, euclidean, circle_geodesic, flat_torus };

const char* to_string(MetricKind kind);

namespace detail {

struct MetricData {
  MetricKind kind = MetricKind::matrix;
  std::size_t n = 0;
  std::vector<double> dist;    // matrix kind, row-major
  int dim = 0;                 // coordinate dimension (1 for circle angles)
  std::vector<double> coords;  // coordinate kinds, row-major n x dim
  double radius = 1.0;         // circle_geodesic
  std::vector<double> sides;   // flat_torus
  double star_radius = std::numeric_limits<double>::infinity();
  std::vector<std::string> labels;
  GridIndex grid;  // euclidean with dim <= 3
};

}  // namespace detail

// A finite metric space on points 0..n-1. Immutable; copies share storage.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace();

  // Validates shape, finiteness, non-negativity, zero diagonal, exact symmetry
  // and the triangle inequality up to `triangle_tolerance`. The first
  // violation in row-major order is reported with its indices.
  static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& rows,
                                       double triangle_tolerance = defaults::kTriangleTolerance);
  static FiniteMetricSpace euclidean(std::vector<double> coords, int dim);
  static FiniteMetricSpace circle_geodesic(std::vector<double> angles, double radius);
  static FiniteMetricSpace flat_torus(std::vector<double> coords, std::vector<double> sides);

  std::size_t size() const noexcept { return data_->n; }
  bool empty() const noexcept { return data_->n == 0; }

  double operator()(Index i, Index j) const noexcept {
    const auto& d = *data_;
    switch (d.kind) {
      case MetricKind::matrix:
        return d.dist[static_cast<std::size_t>(i) * d.n + j];
      case MetricKind::euclidean:
        return detail::euclidean_distance(&d.coords[static_cast<std::size_t>(i) * d.dim],
                                          &d.coords[static_cast<std::size_t>(j) * d.dim], d.dim);
      case MetricKind::circle_geodesic:
        return circle_distance(d.coords[i], d.coords[j], d.radius);
      case MetricKind::flat_torus:
        return torus_distance(i, j);
    }
    return 0.0;
  }

  MetricKind kind() const noexcept { return data_->kind; }
  // Dimension of stored coordinates; 0 for matrix-backed spaces.
  int coordinate_dim() const noexcept { return data_->dim; }
  std::span<const double> point(Index i) const;
  double circle_radius() const noexcept { return data_->radius; }
  const std::vector<double>& torus_sides() const noexcept { return data_->sides; }
  bool has_spatial_index() const noexcept { return !data_->grid.empty(); }

  // Convexity radius of the sampled model (metadata; +inf for convex flat sets).
  double star_radius() const noexcept { return data_->star_radius; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }

  FiniteMetricSpace with_star_radius(double rho) const;
  FiniteMetricSpace with_labels(std::vector<std::string> labels) const;

  // Euclidean distance from an arbitrary point of the ambient R^d to point j.
  double distance_to_point(std::span<const double> p, Index j) const;

  // visit(j, d) for every j with d(center, j) < r; visit returns false to stop.
  template <class Visit>
  void for_each_within(Index center, double r, Visit&& visit) const {
    const auto& d = *data_;
    if (!d.grid.empty()) {
      d.grid.visit_within(&d.coords[static_cast<std::size_t>(center) * d.dim], r, visit);
      return;
    }
    for (Index j = 0; j < d.n; ++j) {
      const double dj = (*this)(center, j);
      if (dj < r && !visit(j, dj)) return;
    }
  }

  // Same, around an ambient point (euclidean spaces only).
  template <class Visit>
  void for_each_within_point(std::span<const double> p, double r, Visit&& visit) const {
    const auto& d = *data_;
    if (!d.grid.empty()) {
      d.grid.visit_within(p.data(), r, visit);
      return;
    }
    for (Index j = 0; j < d.n; ++j) {
      const double dj = distance_to_point(p, j);
      if (dj < r && !visit(j, dj)) return;
    }
  }

  // Restriction to `members` (sorted); point k of the result is members[k].
  FiniteMetricSpace subspace(std::span<const Index> members) const;

  std::vector<std::vector<double>> to_matrix() const;

 private:
  explicit FiniteMetricSpace(std::shared_ptr<const detail::MetricData> data)
      : data_(std::move(data)) {}

  static double circle_distance(double a, double b, double radius) noexcept;
  double torus_distance(Index i, Index j) const noexcept;

  std::shared_ptr<const detail::MetricData> data_;
};

inline FiniteMetricSpace build_space(const std::vector<std::vector<double>>& rows,
                                     double triangle_tolerance = defaults::kTriangleTolerance) {
  return FiniteMetricSpace::from_matrix(rows, triangle_tolerance);
}

// Open ball {j : d(center, j) < r}. Requires r > 0.
IndexSet ball(const FiniteMetricSpace& space, Index center, double r);

double diameter(const FiniteMetricSpace& space, std::span<const Index> members);
double diameter(const FiniteMetricSpace& space);

// Hausdorff distance between non-empty index sets.
double hausdorff(const FiniteMetricSpace& space, std::span<const Index> a, std::span<const Index> b);

struct DensityCheck {
  bool dense = true;
  std::optional<Index> witness;  // first point with no subset point strictly within delta
  double worst_gap = 0.0;        // max over points of the distance to the subset
};

DensityCheck is_dense(const FiniteMetricSpace& space, std::span<const Index> subset, double delta);

// {y : d(x, y) < q for some x in Z}.
IndexSet neighborhood(const FiniteMetricSpace& space, std::span<const Index> zone, double q);

// {y : d(x, y) < q for every x in Z}; the intersection of the open q-balls
// around Z.
IndexSet ball_intersection(const FiniteMetricSpace& space, std::span<const Index> zone, double q);

}  // namespace srips
