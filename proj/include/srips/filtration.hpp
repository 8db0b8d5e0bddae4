#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "srips/complex.hpp"
#include "srips/metric.hpp"
#include "srips/scales.hpp"

namespace srips {

struct FilteredSimplex {
  Simplex vertices;
  double birth = 0.0;

  int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const FilteredSimplex&, const FilteredSimplex&) = default;
};

// Simplices with birth values, ordered by (birth, dimension, lexicographic).
class Filtration {
 public:
  Filtration() = default;

  // Sorts; throws ValidationError if a facet is missing or is born later
  // than its coface.
  static Filtration from_simplices(std::size_t vertex_count, std::vector<FilteredSimplex> simplices);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<FilteredSimplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  int dimension() const noexcept;

  // {sigma : birth(sigma) <= t}.
  SimplicialComplex sublevel(double t) const;

  const std::optional<ScaleSequence>& profile() const noexcept { return profile_; }
  void set_profile(ScaleSequence profile) { profile_ = std::move(profile); }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<FilteredSimplex> simplices_;
  std::optional<ScaleSequence> profile_;
};

// b(sigma) = max over 1 <= i < |sigma| of cluster_width(sigma, i) / p_i; 0 for vertices.
double birth_value(const FiniteMetricSpace& space, std::span<const Index> simplex,
                   const ScaleSequence& profile);

// The filtration t -> sRips(space; t * profile) (non-strict), up to dim_cap,
// keeping simplices born at or before max_birth. The profile must start at 1.
Filtration build_filtration(const FiniteMetricSpace& space, const ScaleSequence& profile,
                            int dim_cap,
                            double max_birth = std::numeric_limits<double>::infinity());

}  // namespace srips
