#pragma once

#include <span>

#include "srips/complex.hpp"
#include "srips/metric.hpp"
#include "srips/scales.hpp"

namespace srips {

// strict: every part has diameter < bound; inclusive: diameter <= bound.
enum class Bound { strict, inclusive };

// True iff `simplex` splits into at most `parts` sets of bounded diameter.
// Exact: colours the conflict graph (pairs violating the bound) with
// `parts` colours, one connected component at a time.
bool admits_partition(const FiniteMetricSpace& space, std::span<const Index> simplex,
                      std::size_t parts, double bound, Bound mode = Bound::strict);

// Same on a precomputed distance table of the simplex (row-major k x k).
bool admits_partition_table(std::span<const double> table, std::size_t k, std::size_t parts,
                            double bound, Bound mode);

// Membership in sRips(space; scales): for i = 1..|simplex|-1 the simplex
// splits into i parts of diameter < r_i.
bool is_simplex(const FiniteMetricSpace& space, std::span<const Index> simplex,
                const ScaleSequence& scales, Bound mode = Bound::strict);

struct BuildOptions {
  std::size_t max_simplex_size = defaults::kMaxSimplexSize;
};

// All simplices of sRips(space; scales) up to dimension dim_cap, in
// lexicographic order per dimension. Candidates are cliques of the r_1-graph
// extended by common neighbours above their largest vertex.
SimplicialComplex build_complex(const FiniteMetricSpace& space, const ScaleSequence& scales,
                                int dim_cap, const BuildOptions& options = {});

// Restriction to a live subset, with vertices kept in the original labels.
SimplicialComplex build_complex_on(const FiniteMetricSpace& space, std::span<const Index> live,
                                   const ScaleSequence& scales, int dim_cap,
                                   const BuildOptions& options = {});

// Ordinary Vietoris-Rips complex: diameter < r.
SimplicialComplex build_rips(const FiniteMetricSpace& space, double r, int dim_cap);

// Smallest w such that the simplex splits into at most i parts of diameter
// <= w. Requires 1 <= i < |simplex|.
double cluster_width(const FiniteMetricSpace& space, std::span<const Index> simplex, std::size_t i);
double cluster_width_table(std::span<const double> table, std::size_t k, std::size_t i);

}  // namespace srips
