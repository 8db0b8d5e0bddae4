#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srips/crushing.hpp"
#include "srips/pseudo_metric_union.hpp"

namespace srips {

struct UnionCrushParams {
  double alpha = 1.0;                     // the model lies in the open ball B(center, alpha)
  double divisor = defaults::kDivisor;    // delta1' = delta1(r_inf, alpha) / divisor
  std::vector<double> center;             // star centre of the model; empty = origin
  bool keep_certificates = true;
};

struct UnionCrushResult {
  bool success = false;
  double delta1_prime = 0.0;
  // Elementary crushings of the right side, in order; the last one folds the
  // residue into the point nearest the centre.
  std::vector<CrushingStep> steps;
  std::size_t model_points_used = 0;     // left points that produced a step
  std::size_t model_points_skipped = 0;  // left points with no live right point within 2 delta1'
  // Steps whose target is farther than delta1' from the ideal location
  // (possible when the left sample is sparser than delta1').
  std::size_t far_targets = 0;
  IndexSet terminal;  // right-side indices
  std::string reason;
};

// Crushes the right side of the union following the farthest-point schedule
// driven by the left (model) side: for each left point y with
// |y - center| >= r_inf / sqrt(2), in decreasing distance, the live right
// points within 2 delta1' of y are crushed into the live right point closest
// to the ideal location y_hat (distance r_inf^2 / (2 r') from y towards the
// centre). The remainder is then crushed into the right point nearest the
// centre. Every step is verified with crush_condition. Requires a euclidean
// left side inside B(center, alpha), alpha >= r_1 and
// declared_bound < delta1'.
UnionCrushResult crushable_in_union(const PseudoMetricUnion& u, const ScaleSequence& scales,
                                    const UnionCrushParams& params);

}  // namespace srips
