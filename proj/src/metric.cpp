#include "srips/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace srips {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_radius(double r) {
  if (!(r > 0.0)) throw PreconditionError("radius must be positive");
}

}  // namespace

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::matrix: return "matrix";
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::circle_geodesic: return "circle-geodesic";
    case MetricKind::flat_torus: return "flat-torus";
  }
  return "unknown";
}

FiniteMetricSpace::FiniteMetricSpace() : data_(std::make_shared<detail::MetricData>()) {}

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<double>>& rows,
                                                 double tol) {
  const std::size_t n = rows.size();
  if (n == 0) throw ValidationError("distance matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ValidationError("distance matrix is not square: row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].size()) + " entries, expected " +
                                std::to_string(n),
                            {static_cast<Index>(i)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!std::isfinite(v))
        throw ValidationError("non-finite distance at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")",
                              {static_cast<Index>(i), static_cast<Index>(j)});
      if (v < 0.0)
        throw ValidationError("negative distance at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")",
                              {static_cast<Index>(i), static_cast<Index>(j)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 0.0)
      throw ValidationError("nonzero diagonal at " + std::to_string(i), {static_cast<Index>(i)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw ValidationError("asymmetric distances at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")",
                              {static_cast<Index>(i), static_cast<Index>(j)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[i][k] > rows[i][j] + rows[j][k] + tol) {
          throw ValidationError("triangle inequality violated at (" + std::to_string(i) + "," +
                                    std::to_string(k) + "," + std::to_string(j) + "): d(" +
                                    std::to_string(i) + "," + std::to_string(k) +
                                    ")=" + fmt_double(rows[i][k]) + " > " +
                                    fmt_double(rows[i][j] + rows[j][k]),
                                {static_cast<Index>(i), static_cast<Index>(k),
                                 static_cast<Index>(j)});
        }
      }
    }
  }
  auto data = std::make_shared<detail::MetricData>();
  data->kind = MetricKind::matrix;
  data->n = n;
  data->dist.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) std::copy(rows[i].begin(), rows[i].end(), &data->dist[i * n]);
  return FiniteMetricSpace(std::move(data));
}

FiniteMetricSpace FiniteMetricSpace::euclidean(std::vector<double> coords, int dim) {
  if (dim < 1) throw PreconditionError("coordinate dimension must be >= 1");
  if (coords.size() % static_cast<std::size_t>(dim) != 0)
    throw PreconditionError("coordinate count is not a multiple of the dimension");
  for (double c : coords)
    if (!std::isfinite(c)) throw ValidationError("non-finite coordinate");
  auto data = std::make_shared<detail::MetricData>();
  data->kind = MetricKind::euclidean;
  data->dim = dim;
  data->n = coords.size() / static_cast<std::size_t>(dim);
  data->coords = std::move(coords);
  constexpr std::size_t kIndexThreshold = 64;
  if (dim <= 3 && data->n >= kIndexThreshold) data->grid = detail::GridIndex(data->coords, dim);
  return FiniteMetricSpace(std::move(data));
}

FiniteMetricSpace FiniteMetricSpace::circle_geodesic(std::vector<double> angles, double radius) {
  if (!(radius > 0.0)) throw PreconditionError("circle radius must be positive");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (double& a : angles) {
    if (!std::isfinite(a)) throw ValidationError("non-finite angle");
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
  }
  auto data = std::make_shared<detail::MetricData>();
  data->kind = MetricKind::circle_geodesic;
  data->dim = 1;
  data->n = angles.size();
  data->coords = std::move(angles);
  data->radius = radius;
  data->star_radius = std::numbers::pi * radius / 2.0;
  return FiniteMetricSpace(std::move(data));
}

FiniteMetricSpace FiniteMetricSpace::flat_torus(std::vector<double> coords,
                                                std::vector<double> sides) {
  if (sides.empty()) throw PreconditionError("torus needs at least one side length");
  for (double s : sides)
    if (!(s > 0.0)) throw PreconditionError("torus side lengths must be positive");
  const std::size_t dim = sides.size();
  if (coords.size() % dim != 0)
    throw PreconditionError("coordinate count is not a multiple of the torus dimension");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double side = sides[i % dim];
    double c = std::fmod(coords[i], side);
    if (c < 0.0) c += side;
    coords[i] = c;
  }
  auto data = std::make_shared<detail::MetricData>();
  data->kind = MetricKind::flat_torus;
  data->dim = static_cast<int>(dim);
  data->n = coords.size() / dim;
  data->coords = std::move(coords);
  data->sides = std::move(sides);
  data->star_radius = *std::min_element(data->sides.begin(), data->sides.end()) / 4.0;
  return FiniteMetricSpace(std::move(data));
}

double FiniteMetricSpace::circle_distance(double a, double b, double radius) noexcept {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double delta = std::fabs(a - b);
  return radius * std::min(delta, kTwoPi - delta);
}

double FiniteMetricSpace::torus_distance(Index i, Index j) const noexcept {
  const auto& d = *data_;
  double sum = 0.0;
  for (int k = 0; k < d.dim; ++k) {
    const double delta = std::fabs(d.coords[static_cast<std::size_t>(i) * d.dim + k] -
                                   d.coords[static_cast<std::size_t>(j) * d.dim + k]);
    const double wrapped = std::min(delta, d.sides[k] - delta);
    sum += wrapped * wrapped;
  }
  return std::sqrt(sum);
}

std::span<const double> FiniteMetricSpace::point(Index i) const {
  const auto& d = *data_;
  if (d.dim == 0) throw PreconditionError("space has no coordinates");
  return {&d.coords[static_cast<std::size_t>(i) * d.dim], static_cast<std::size_t>(d.dim)};
}

double FiniteMetricSpace::distance_to_point(std::span<const double> p, Index j) const {
  const auto& d = *data_;
  if (d.kind != MetricKind::euclidean)
    throw PreconditionError("ambient points are only defined for euclidean spaces");
  if (p.size() != static_cast<std::size_t>(d.dim))
    throw PreconditionError("ambient point has the wrong dimension");
  return detail::euclidean_distance(p.data(), &d.coords[static_cast<std::size_t>(j) * d.dim], d.dim);
}

FiniteMetricSpace FiniteMetricSpace::with_star_radius(double rho) const {
  auto copy = std::make_shared<detail::MetricData>(*data_);
  copy->star_radius = rho;
  return FiniteMetricSpace(std::move(copy));
}

FiniteMetricSpace FiniteMetricSpace::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != size())
    throw PreconditionError("label count does not match point count");
  auto copy = std::make_shared<detail::MetricData>(*data_);
  copy->labels = std::move(labels);
  return FiniteMetricSpace(std::move(copy));
}

FiniteMetricSpace FiniteMetricSpace::subspace(std::span<const Index> members) const {
  const auto& d = *data_;
  for (Index m : members)
    if (m >= d.n) throw PreconditionError("subspace member out of range");
  FiniteMetricSpace out;
  const std::size_t m = members.size();
  switch (d.kind) {
    case MetricKind::matrix: {
      auto data = std::make_shared<detail::MetricData>();
      data->kind = MetricKind::matrix;
      data->n = m;
      data->dist.resize(m * m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) data->dist[a * m + b] = (*this)(members[a], members[b]);
      out = FiniteMetricSpace(std::move(data));
      break;
    }
    case MetricKind::euclidean:
    case MetricKind::circle_geodesic:
    case MetricKind::flat_torus: {
      std::vector<double> coords;
      coords.reserve(m * d.dim);
      for (Index i : members)
        coords.insert(coords.end(), &d.coords[static_cast<std::size_t>(i) * d.dim],
                      &d.coords[static_cast<std::size_t>(i) * d.dim] + d.dim);
      if (d.kind == MetricKind::euclidean)
        out = euclidean(std::move(coords), d.dim);
      else if (d.kind == MetricKind::circle_geodesic)
        out = circle_geodesic(std::move(coords), d.radius);
      else
        out = flat_torus(std::move(coords), d.sides);
      break;
    }
  }
  auto data = std::make_shared<detail::MetricData>(*out.data_);
  data->star_radius = d.star_radius;
  if (!d.labels.empty()) {
    data->labels.clear();
    for (Index i : members) data->labels.push_back(d.labels[i]);
  }
  return FiniteMetricSpace(std::move(data));
}

std::vector<std::vector<double>> FiniteMetricSpace::to_matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) rows[i][j] = (*this)(i, j);
  return rows;
}

IndexSet ball(const FiniteMetricSpace& space, Index center, double r) {
  require_radius(r);
  if (center >= space.size()) throw PreconditionError("ball center out of range");
  IndexSet out;
  space.for_each_within(center, r, [&](Index j, double) {
    out.push_back(j);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

double diameter(const FiniteMetricSpace& space, std::span<const Index> members) {
  double best = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      best = std::max(best, space(members[a], members[b]));
  return best;
}

double diameter(const FiniteMetricSpace& space) {
  double best = 0.0;
  for (Index i = 0; i < space.size(); ++i)
    for (Index j = i + 1; j < space.size(); ++j) best = std::max(best, space(i, j));
  return best;
}

namespace {

double directed_hausdorff(const FiniteMetricSpace& space, std::span<const Index> from,
                          std::span<const Index> to) {
  double worst = 0.0;
  for (Index a : from) {
    double nearest = std::numeric_limits<double>::infinity();
    for (Index b : to) nearest = std::min(nearest, space(a, b));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

double hausdorff(const FiniteMetricSpace& space, std::span<const Index> a, std::span<const Index> b) {
  if (a.empty() || b.empty()) throw PreconditionError("hausdorff distance needs non-empty sets");
  return std::max(directed_hausdorff(space, a, b), directed_hausdorff(space, b, a));
}

DensityCheck is_dense(const FiniteMetricSpace& space, std::span<const Index> subset, double delta) {
  require_radius(delta);
  DensityCheck result;
  for (Index x = 0; x < space.size(); ++x) {
    double nearest = std::numeric_limits<double>::infinity();
    for (Index a : subset) nearest = std::min(nearest, space(a, x));
    result.worst_gap = std::max(result.worst_gap, nearest);
    if (!(nearest < delta) && !result.witness) {
      result.dense = false;
      result.witness = x;
    }
  }
  return result;
}

IndexSet neighborhood(const FiniteMetricSpace& space, std::span<const Index> zone, double q) {
  require_radius(q);
  IndexSet out;
  for (Index y = 0; y < space.size(); ++y) {
    for (Index x : zone) {
      if (space(x, y) < q) {
        out.push_back(y);
        break;
      }
    }
  }
  return out;
}

IndexSet ball_intersection(const FiniteMetricSpace& space, std::span<const Index> zone, double q) {
  require_radius(q);
  IndexSet out;
  for (Index y = 0; y < space.size(); ++y) {
    bool inside = true;
    for (Index x : zone) {
      if (!(space(x, y) < q)) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(y);
  }
  return out;
}

}  // namespace srips
