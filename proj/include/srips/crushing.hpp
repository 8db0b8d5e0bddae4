#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srips/metric.hpp"
#include "srips/scales.hpp"

namespace srips {

// One verified inclusion B(crushed, radius) & live  within  B(target, radius) & live.
struct InclusionCertificate {
  Index crushed = 0;
  double radius = 0.0;
  std::size_t ball_size = 0;  // |B(crushed, radius) & live|
};

struct CrushingStep {
  IndexSet crushed;  // A
  Index target = 0;  // b
  std::vector<InclusionCertificate> certificate;
};

struct CrushCheck {
  bool holds = false;
  std::vector<InclusionCertificate> certificate;
  // On failure: a live point in B(a, r) but outside B(b, r).
  std::optional<Index> failing_center;
  std::optional<Index> witness;
  double failing_radius = 0.0;
};

// For every a in A and every distinct scale value r:
// B(a, r) & live  is contained in  B(b, r) & live.
CrushCheck crush_condition(const FiniteMetricSpace& space, const LiveSet& live,
                           std::span<const Index> crushed, Index target, const ScaleSequence& scales);

// Verifies the step against the live set, then removes A. Throws
// PreconditionError (naming the failing point) if the step does not hold.
void apply_crush(const FiniteMetricSpace& space, LiveSet& live, const CrushingStep& step,
                 const ScaleSequence& scales);
IndexSet apply_crush(const FiniteMetricSpace& space, std::span<const Index> live,
                     const CrushingStep& step, const ScaleSequence& scales);

struct ContiguityReport {
  bool holds = true;
  std::size_t simplices_checked = 0;
  std::optional<Simplex> violation;  // first sigma (containing a) with sigma + b not a simplex
};

// For an elementary step A = {a}: every simplex sigma containing a of the
// live complex (up to dim_cap) satisfies: sigma + {b} is a simplex.
ContiguityReport contiguity_certificate(const FiniteMetricSpace& space, const LiveSet& live,
                                        const CrushingStep& step, const ScaleSequence& scales,
                                        int dim_cap);

enum class CrushStrategy { farthest_first, exhaustive };

struct CrushOptions {
  CrushStrategy strategy = CrushStrategy::farthest_first;
  // Farthest-first centre; default is a minimum-eccentricity point (the point
  // nearest the coordinate centroid for euclidean spaces above 4096 points).
  std::optional<Index> center;
  // Keep per-step certificates (memory grows with the sequence).
  bool keep_certificates = true;
};

struct CrushResult {
  bool success = false;
  std::vector<CrushingStep> steps;
  IndexSet terminal;
  double terminal_diameter = 0.0;
  std::optional<Index> center;
  std::string reason;
};

// Searches for a sequence of elementary crushings ending in a set of
// diameter < r_inf.
//  farthest_first - repeatedly crush the live point farthest from the centre
//                   into the admissible point closest to the target location
//                   (for euclidean spaces the point at distance
//                   r_inf^2 / (2 r') from it towards the centre, otherwise
//                   the point itself among strictly nearer points); stops once
//                   the diameter is below r_inf
//  exhaustive     - apply the lexicographically first admissible pair (a, b)
//                   until a single point remains
// Failure is a value: `terminal` holds the live set where no step was found.
CrushResult greedy_crushable(const FiniteMetricSpace& space, const ScaleSequence& scales,
                             const CrushOptions& options = {});
CrushResult greedy_crushable_on(const FiniteMetricSpace& space, std::span<const Index> live,
                                const ScaleSequence& scales, const CrushOptions& options = {});

struct SequenceCheck {
  bool valid = true;
  std::size_t failing_step = 0;
  std::string reason;
};

// Replays steps from `initial`, re-checking every condition and the final diameter.
SequenceCheck verify_sequence(const FiniteMetricSpace& space, std::span<const Index> initial,
                              std::span<const CrushingStep> steps, const ScaleSequence& scales);

// Inscribed radius r_inf (1 - sqrt(1 - r_inf^2 / (4 r'^2))); needs r' >= r_inf / sqrt(2).
double delta1(double r_inf, double r_prime);
// delta1(r_inf, alpha) / divisor; needs alpha >= r_inf and divisor >= 8.
double delta1_prime(double r_inf, double alpha, double divisor = defaults::kDivisor);

// Point of minimum eccentricity within `live` (lowest index on ties).
Index one_center(const FiniteMetricSpace& space, std::span<const Index> live);

}  // namespace srips
