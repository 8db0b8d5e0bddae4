#include "srips/union_crushing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace srips {

namespace {

std::optional<CrushingStep> try_target(const FiniteMetricSpace& right, const LiveSet& live,
                                       const IndexSet& crushed, Index target,
                                       const ScaleSequence& scales) {
  CrushCheck check = crush_condition(right, live, crushed, target, scales);
  if (!check.holds) return std::nullopt;
  return CrushingStep{crushed, target, std::move(check.certificate)};
}

}  // namespace

UnionCrushResult crushable_in_union(const PseudoMetricUnion& u, const ScaleSequence& scales,
                                    const UnionCrushParams& params) {
  const FiniteMetricSpace& model = u.left();
  const FiniteMetricSpace& right = u.right();
  if (model.kind() != MetricKind::euclidean)
    throw PreconditionError("the model side must be a euclidean sample of a star-shaped set");
  const int dim = model.coordinate_dim();
  std::vector<double> center = params.center;
  if (center.empty()) center.assign(dim, 0.0);
  if (static_cast<int>(center.size()) != dim) throw PreconditionError("centre has the wrong dimension");
  if (!(params.alpha >= scales.first()))
    throw PreconditionError("alpha must be at least r_1");

  UnionCrushResult result;
  result.delta1_prime = delta1_prime(scales.r_inf(), params.alpha, params.divisor);
  const double dp = result.delta1_prime;
  if (!(u.declared_bound() < dp))
    throw PreconditionError("declared bound " + std::to_string(u.declared_bound()) +
                            " is not below delta1' = " + std::to_string(dp));

  std::vector<double> radius(model.size());
  for (Index v = 0; v < model.size(); ++v) {
    radius[v] = model.distance_to_point(center, v);
    if (!(radius[v] < params.alpha))
      throw PreconditionError("model point " + std::to_string(v) + " lies outside B(center, alpha)");
  }
  IndexSet order = iota_set(model.size());
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return radius[a] > radius[b]; });

  const double r_inf = scales.r_inf();
  const double stop_radius = r_inf / std::numbers::sqrt2;
  LiveSet live(right.size(), true);
  std::vector<std::pair<double, Index>> ring;

  for (Index y : order) {
    const double r_prime = radius[y];
    if (r_prime < stop_radius) break;
    IndexSet crushed;
    u.for_each_right_within(y, 2.0 * dp, [&](Index j, double) {
      if (live.contains(j)) crushed.push_back(j);
      return true;
    });
    if (crushed.empty()) {
      ++result.model_points_skipped;
      continue;
    }
    std::sort(crushed.begin(), crushed.end());
    if (crushed.size() == live.size()) break;  // nothing left to crush into; the final step handles it

    const auto py = model.point(y);
    std::vector<double> y_hat(dim);
    const double shift = r_inf * r_inf / (2.0 * r_prime);
    for (int k = 0; k < dim; ++k) y_hat[k] = py[k] + (center[k] - py[k]) * (shift / r_prime);

    // Candidates by d'(y_hat, .), closest first, in doubling shells.
    std::optional<CrushingStep> step;
    double chosen_distance = 0.0;
    double inner = 0.0;
    double outer = dp;
    const double reach = shift + 2.0 * dp + r_inf;
    while (!step && inner < reach) {
      ring.clear();
      u.for_each_right_within_point(y_hat, outer, [&](Index j, double d) {
        if (d >= inner && live.contains(j) && !std::binary_search(crushed.begin(), crushed.end(), j))
          ring.emplace_back(d, j);
        return true;
      });
      std::sort(ring.begin(), ring.end());
      for (const auto& [d, j] : ring) {
        step = try_target(right, live, crushed, j, scales);
        if (step) {
          chosen_distance = d;
          break;
        }
      }
      inner = outer;
      outer *= 2.0;
    }
    if (!step) {
      result.reason = "no verified target for the right points near model point " + std::to_string(y);
      result.terminal = live.members();
      return result;
    }
    if (!(chosen_distance < dp)) ++result.far_targets;
    for (Index j : step->crushed) live.erase(j);
    if (!params.keep_certificates) step->certificate.clear();
    result.steps.push_back(std::move(*step));
    ++result.model_points_used;
  }

  // Final fold into the live right point nearest the centre.
  Index origin_twin = 0;
  double best = std::numeric_limits<double>::infinity();
  for (Index j : live.members()) {
    const double d = u.point_to_right(center, j);
    if (d < best) {
      best = d;
      origin_twin = j;
    }
  }
  IndexSet residue = live.members();
  residue.erase(std::find(residue.begin(), residue.end(), origin_twin));
  if (!residue.empty()) {
    auto step = try_target(right, live, residue, origin_twin, scales);
    if (!step) {
      result.reason = "the final fold into right point " + std::to_string(origin_twin) + " fails";
      result.terminal = live.members();
      return result;
    }
    for (Index j : residue) live.erase(j);
    if (!params.keep_certificates) step->certificate.clear();
    result.steps.push_back(std::move(*step));
  }
  result.terminal = live.members();
  result.success = true;
  return result;
}

}  // namespace srips
