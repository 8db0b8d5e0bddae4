#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srips/complex.hpp"
#include "srips/crushing.hpp"
#include "srips/pseudo_metric_union.hpp"
#include "srips/scales.hpp"

namespace srips {

// Cover of `ambient` by the traces of open radius-balls around `centers`.
// Nerve vertices are positions in `centers`.
struct Cover {
  FiniteMetricSpace ambient;
  IndexSet centers;
  double radius = 0.0;
  std::vector<IndexSet> elements;               // elements[k] = {x : d(centers[k], x) < radius}
  std::vector<std::vector<double>> center_distance;  // [k][x]
  bool covering = false;
};

// Balls B(x, alpha) in `space`.
Cover build_cover(const FiniteMetricSpace& space, std::span<const Index> centers, double alpha);
// Traces B'(x, alpha) & right for left-side centres x.
Cover build_cover(const PseudoMetricUnion& u, std::span<const Index> left_centers, double alpha);

// Simplices = sets of at most size_cap centre positions whose elements share a point.
SimplicialComplex nerve_complex(const Cover& cover, std::size_t size_cap);

struct CriticalRadius {
  Simplex sigma;  // centre positions
  double radius = 0.0;
};

// p_sigma = min over points z of max over x in sigma of d(z, x), for every
// sigma of at most size_cap centres, lexicographic.
std::vector<CriticalRadius> critical_radii(const FiniteMetricSpace& space, std::span<const Index> centers,
                                           std::size_t size_cap);

// (p' - alpha) / 2 for the smallest critical radius p' > alpha; +inf if none;
// nullopt when alpha equals some critical radius.
std::optional<double> mu_margin(const FiniteMetricSpace& space, std::span<const Index> centers,
                                double alpha, std::size_t size_cap);

// alpha - max{p_sigma < alpha}: how far alpha can shrink before a non-empty
// intersection of alpha-balls empties. +inf if no critical radius is below alpha.
double critical_gap_below(const FiniteMetricSpace& space, std::span<const Index> centers, double alpha,
                          std::size_t size_cap);

// Gaps between alpha and the centre-to-point distances: lower = alpha - the
// largest distance below alpha, upper = the smallest distance >= alpha minus
// alpha. Perturbing every distance by less than both keeps each ball trace,
// hence each intersection, unchanged.
struct LeverageMargins {
  double lower = std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
};
LeverageMargins leverage_margins(const FiniteMetricSpace& space, std::span<const Index> centers, double alpha);

struct IntersectionRecord {
  Simplex sigma;  // centre positions
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::optional<double> hausdorff;  // set when both sides are non-empty
  bool mismatch() const noexcept { return (left_size == 0) != (right_size == 0); }
};

struct IntersectionReport {
  std::vector<IntersectionRecord> records;  // both-empty sigmas are skipped
  double max_hausdorff = 0.0;
  std::size_t mismatches = 0;
  std::optional<Simplex> first_mismatch;
};

// Hausdorff distance (in the union) between the intersection of left balls
// B(z, alpha) and the intersection of right traces B'(z, alpha) & right, per
// sigma of at most size_cap left centres.
IntersectionReport intersection_hausdorff(const PseudoMetricUnion& u, std::span<const Index> left_centers,
                                          double alpha, std::size_t size_cap);

struct NerveIsoReport {
  bool isomorphic = true;
  std::optional<Simplex> first_mismatch;
  bool mismatch_in_left = false;  // the mismatching simplex belongs to the left nerve only
};

// Compares the nerves of two covers with the same centre list simplex for simplex.
NerveIsoReport nerve_iso_check(const Cover& left, const Cover& right, std::size_t size_cap);

enum class CoverVerdict { crushable, homology_trivial, suspect };
const char* to_string(CoverVerdict verdict);

struct GoodCoverRecord {
  Simplex sigma;
  std::size_t size = 0;
  CoverVerdict verdict = CoverVerdict::suspect;
  std::vector<std::size_t> betti;
  std::size_t crush_steps = 0;
  bool identity_holds = true;  // sRips of the intersection = intersection of the sRips
};

struct GoodCoverReport {
  std::vector<GoodCoverRecord> records;
  std::size_t crushable = 0;
  std::size_t homology_trivial = 0;
  std::size_t suspect = 0;
  bool identity_holds = true;
  bool good() const noexcept { return suspect == 0 && identity_holds; }
};

// For every non-empty intersection of at most size_cap elements: try to crush
// it, compute its Betti numbers up to dim_cap, and compare sRips of the
// intersection with the intersection of the elements' complexes.
GoodCoverReport good_cover_check(const Cover& cover, const ScaleSequence& scales, int dim_cap,
                                 std::size_t size_cap);

// min over points x of max over centres c of (radius - d(x, c)). Throws
// PreconditionError if the cover does not cover.
double lebesgue_number(const Cover& cover);

// True iff every simplex of the complex (over the cover's ambient indices)
// lies inside some cover element. Returns the first offender otherwise.
std::optional<Simplex> simplex_outside_cover(const Cover& cover, const SimplicialComplex& complex);

}  // namespace srips
