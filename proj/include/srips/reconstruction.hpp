#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srips/nerve.hpp"
#include "srips/pseudo_metric_union.hpp"
#include "srips/scales.hpp"

namespace srips {

// Greedy net: scan points in index order from `start`, keep a point when it is
// at distance >= spacing from every kept point. The result is spacing-dense.
IndexSet greedy_net(const FiniteMetricSpace& space, double spacing, Index start = 0);

struct ReconstructionConfig {
  std::size_t points = 60;
  double circle_radius = 1.0;
  double alpha = 0.7;
  std::size_t m = 2;  // lower bound factor on the scales: eps0 / m < r~ < eps0
  double divisor = defaults::kDivisor;
  ScaleSequence scales = ScaleSequence({0.6, 0.4});
  double jitter_fraction = 0.25;       // angular jitter amplitude as a fraction of delta
  std::optional<double> jitter;        // absolute amplitude, overrides jitter_fraction
  std::uint64_t seed = 0;
  int dim_cap = 3;
  std::size_t size_cap = defaults::kSizeCap;
};

struct LinkResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReconstructionReport {
  IndexSet centers;
  double star_radius = 0.0;
  double mu = 0.0;               // +inf when no critical radius exceeds alpha
  double delta1_prime = 0.0;     // delta1'(alpha / (4 m), alpha)
  double delta2_prime = 0.0;
  LeverageMargins leverage;
  double delta = 0.0;            // min{delta2', alpha / 8, mu / 2}
  double jitter = 0.0;
  double gh_bound = 0.0;         // Hausdorff distance of X and Y inside the gluing
  bool gh_below_delta = false;
  double epsilon0 = 0.0;         // alpha / 4
  bool scales_in_window = false; // eps0 / m < r~ < eps0
  double lebesgue = 0.0;         // of the cover of Y

  std::vector<std::size_t> model_betti;
  std::vector<std::size_t> nerve_betti;
  std::vector<std::size_t> nerve_w_betti;
  std::vector<std::size_t> srips_betti;
  std::vector<std::size_t> srips_counts;

  NerveIsoReport iso;
  IntersectionReport intersections;
  GoodCoverReport good_cover;
  std::vector<LinkResult> links;
  bool all_pass = false;

  FiniteMetricSpace model;
  FiniteMetricSpace perturbed;
};

// X = geodesic circle grid, A = greedy alpha/2-net, Y = X with angles jittered,
// glued to X along the identity correspondence. Checks links (i)-(iv):
//  (i)   model Betti numbers = Betti numbers of Nerve(C)
//  (ii)  Nerve(C) = Nerve(C-bar), with no one-sided empty intersection and
//        intersection Hausdorff distances below delta1' / 2
//  (iii) Nerve(C-bar) = Nerve(W), W the selective Rips complexes of the traces
//  (iv)  W is a cover of sRips(Y) whose intersections pass good_cover_check,
//        and Betti(sRips(Y)) = Betti(Nerve(W))
ReconstructionReport run_reconstruction(const ReconstructionConfig& config);

}  // namespace srips
