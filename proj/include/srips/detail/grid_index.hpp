#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "srips/types.hpp"

namespace srips::detail {

// Euclidean distance used everywhere a coordinate-backed space is measured.
// All call sites go through this one function so that repeated evaluations of
// the same pair agree bit-for-bit.
inline double euclidean_distance(const double* a, const double* b, int dim) noexcept {
  double sum = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

// Uniform bucket grid over points in R^1..R^3. Buckets hold a copy of their
// points' coordinates so range queries scan contiguous memory.
class GridIndex {
 public:
  GridIndex() = default;

  GridIndex(std::span<const double> coords, int dim) : dim_(dim) {
    const std::size_t n = coords.size() / static_cast<std::size_t>(dim);
    if (n == 0) return;
    for (int k = 0; k < 3; ++k) {
      lo_[k] = 0.0;
      extent_[k] = 1;
    }
    double hi[3] = {0.0, 0.0, 0.0};
    for (int k = 0; k < dim; ++k) {
      lo_[k] = hi[k] = coords[k];
      for (std::size_t i = 1; i < n; ++i) {
        lo_[k] = std::min(lo_[k], coords[i * dim + k]);
        hi[k] = std::max(hi[k], coords[i * dim + k]);
      }
    }
    double volume = 1.0;
    int spread_dims = 0;
    for (int k = 0; k < dim; ++k) {
      if (hi[k] > lo_[k]) {
        volume *= hi[k] - lo_[k];
        ++spread_dims;
      }
    }
    // Aim for roughly kTargetPerCell points per bucket.
    constexpr double kTargetPerCell = 24.0;
    cell_ = spread_dims == 0 ? 1.0
                             : std::pow(volume * kTargetPerCell / static_cast<double>(n),
                                        1.0 / spread_dims);
    if (!(cell_ > 0.0) || !std::isfinite(cell_)) cell_ = 1.0;
    std::size_t total = 1;
    for (int k = 0; k < dim; ++k) {
      extent_[k] = static_cast<long>(std::floor((hi[k] - lo_[k]) / cell_)) + 1;
      total *= static_cast<std::size_t>(extent_[k]);
    }
    start_.assign(total + 1, 0);
    std::vector<std::size_t> cell_of(n);
    for (std::size_t i = 0; i < n; ++i) {
      cell_of[i] = cell_id(&coords[i * dim]);
      ++start_[cell_of[i] + 1];
    }
    for (std::size_t c = 0; c < total; ++c) start_[c + 1] += start_[c];
    ids_.resize(n);
    points_.resize(n * dim);
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t slot = fill[cell_of[i]]++;
      ids_[slot] = static_cast<Index>(i);
      std::copy_n(&coords[i * dim], dim, &points_[slot * dim]);
    }
  }

  bool empty() const noexcept { return ids_.empty(); }

  // Calls visit(j, d) for every indexed point j with d = |p - x_j| < r.
  // Stops early when visit returns false. Returns false if stopped early.
  template <class Visit>
  bool visit_within(const double* p, double r, Visit&& visit) const {
    long lo[3] = {0, 0, 0};
    long hi[3] = {0, 0, 0};
    for (int k = 0; k < dim_; ++k) {
      lo[k] = std::max(0L, static_cast<long>(std::floor((p[k] - r - lo_[k]) / cell_)));
      hi[k] = std::min(extent_[k] - 1, static_cast<long>(std::floor((p[k] + r - lo_[k]) / cell_)));
      if (lo[k] > hi[k]) return true;
    }
    for (long z = lo[2]; z <= hi[2]; ++z) {
      for (long y = lo[1]; y <= hi[1]; ++y) {
        const std::size_t row = (static_cast<std::size_t>(z) * extent_[1] + y) * extent_[0];
        const std::size_t first = start_[row + lo[0]];
        const std::size_t last = start_[row + hi[0] + 1];
        for (std::size_t s = first; s < last; ++s) {
          const double d = euclidean_distance(p, &points_[s * dim_], dim_);
          if (d < r && !visit(ids_[s], d)) return false;
        }
      }
    }
    return true;
  }

 private:
  std::size_t cell_id(const double* x) const {
    std::size_t id = 0;
    for (int k = dim_ - 1; k >= 0; --k) {
      long c = static_cast<long>(std::floor((x[k] - lo_[k]) / cell_));
      c = std::clamp(c, 0L, extent_[k] - 1);
      id = id * static_cast<std::size_t>(extent_[k]) + static_cast<std::size_t>(c);
    }
    return id;
  }

  int dim_ = 0;
  double cell_ = 1.0;
  double lo_[3] = {0.0, 0.0, 0.0};
  long extent_[3] = {1, 1, 1};
  std::vector<std::size_t> start_;
  std::vector<Index> ids_;
  std::vector<double> points_;
};

}  // namespace srips::detail
