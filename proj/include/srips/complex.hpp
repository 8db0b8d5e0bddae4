#pragma once

#include <span>
#include <vector>

#include "srips/types.hpp"

namespace srips {

// Face-closed set of simplices on vertices 0..vertex_count-1, stored per
// dimension in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Sorts and deduplicates; throws ValidationError (witness = the simplex)
  // if a facet of some simplex is missing or a vertex is out of range.
  static SimplicialComplex from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices);
  // Adds every face of the given simplices.
  static SimplicialComplex closure(std::size_t vertex_count, std::span<const Simplex> simplices);
  // Trusted constructor: per-dimension lists already sorted and face-closed.
  static SimplicialComplex from_sorted_layers(std::size_t vertex_count,
                                              std::vector<std::vector<Simplex>> layers);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  // -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(layers_.size()) - 1; }
  std::size_t count(int dim) const noexcept {
    return dim >= 0 && dim < static_cast<int>(layers_.size()) ? layers_[dim].size() : 0;
  }
  std::vector<std::size_t> counts() const;
  std::size_t size() const noexcept;

  const std::vector<Simplex>& simplices(int dim) const;
  // All simplices ordered by (dimension, lexicographic).
  std::vector<Simplex> all() const;

  bool contains(std::span<const Index> simplex) const;
  // Position of the simplex inside simplices(dim), or -1.
  long index_of(std::span<const Index> simplex) const;

  bool subcomplex_of(const SimplicialComplex& other) const;
  // Restriction to simplices of dimension <= dim.
  SimplicialComplex skeleton(int dim) const;
  // Simplices of both complexes.
  friend SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);
  // Induced subcomplex on `vertices`, relabelled to 0..|vertices|-1 (or kept
  // in the original labels when relabel is false).
  SimplicialComplex induced(std::span<const Index> vertices, bool relabel) const;
  // Image under a vertex map given by `labels[v]` (must be injective on vertices).
  SimplicialComplex relabeled(std::span<const Index> labels, std::size_t new_vertex_count) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> layers_;
};

// Every codimension-one face, in lexicographic order.
std::vector<Simplex> facets(std::span<const Index> simplex);

}  // namespace srips
