#include "srips/crushing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "srips/selective_rips.hpp"

namespace srips {

namespace {

constexpr std::size_t kExactDiameterLimit = 512;
constexpr std::size_t kTerminalDiameterLimit = 20000;
constexpr std::size_t kOneCenterLimit = 4096;

void require_step_shape(const LiveSet& live, std::span<const Index> crushed, Index target) {
  if (crushed.empty()) throw PreconditionError("crushed set must be non-empty");
  if (!live.contains(target)) throw PreconditionError("crush target must be live");
  for (Index a : crushed) {
    if (!live.contains(a)) throw PreconditionError("crushed point " + std::to_string(a) + " is not live");
    if (a == target) throw PreconditionError("crush target lies in the crushed set");
  }
}

double live_diameter(const FiniteMetricSpace& space, const LiveSet& live) {
  const IndexSet members = live.members();
  return diameter(space, members);
}

Index default_center(const FiniteMetricSpace& space, const LiveSet& live) {
  const IndexSet members = live.members();
  if (members.size() <= kOneCenterLimit || space.kind() != MetricKind::euclidean)
    return one_center(space, members);
  const int dim = space.coordinate_dim();
  std::vector<double> centroid(dim, 0.0);
  for (Index v : members) {
    const auto p = space.point(v);
    for (int a = 0; a < dim; ++a) centroid[a] += p[a];
  }
  for (double& c : centroid) c /= static_cast<double>(members.size());
  Index best = members.front();
  double best_d = space.distance_to_point(centroid, best);
  for (Index v : members) {
    const double d = space.distance_to_point(centroid, v);
    if (d < best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

class FarthestFirst {
 public:
  FarthestFirst(const FiniteMetricSpace& space, LiveSet live, const ScaleSequence& scales,
                const CrushOptions& options)
      : space_(space), live_(std::move(live)), scales_(scales), options_(options) {}

  CrushResult run() {
    CrushResult result;
    if (live_.empty()) throw PreconditionError("cannot crush an empty set");
    const Index center = options_.center ? *options_.center : default_center(space_, live_);
    if (center >= space_.size()) throw PreconditionError("crushing centre out of range");
    result.center = center;
    order_ = live_.members();
    std::vector<double> radius(space_.size(), 0.0);
    for (Index v : order_) radius[v] = space_(center, v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Index a, Index b) { return radius[a] > radius[b]; });

    const double r_inf = scales_.r_inf();
    std::size_t cursor = 0;
    while (true) {
      while (!live_.contains(order_[cursor])) ++cursor;
      const Index y = order_[cursor];
      const double r_prime = radius[y];
      if (live_.size() == 1 || 2.0 * r_prime < r_inf) break;
      if (live_.size() <= kExactDiameterLimit && live_diameter(space_, live_) < r_inf) break;

      auto step = find_step(center, y, r_prime);
      if (!step) {
        result.reason = "no admissible target for point " + std::to_string(y) +
                        " at distance " + std::to_string(r_prime) + " from the centre";
        result.terminal = live_.members();
        result.terminal_diameter = bounded_diameter(result.terminal, r_prime);
        return result;
      }
      live_.erase(y);
      if (!options_.keep_certificates) step->certificate.clear();
      result.steps.push_back(std::move(*step));
    }
    result.terminal = live_.members();
    while (!live_.contains(order_[cursor])) ++cursor;
    result.terminal_diameter = bounded_diameter(result.terminal, radius[order_[cursor]]);
    result.success = result.terminal_diameter < r_inf;
    if (!result.success) result.reason = "terminal diameter not below r_inf";
    return result;
  }

 private:
  double bounded_diameter(const IndexSet& members, double r_prime) const {
    if (members.size() <= kTerminalDiameterLimit) return diameter(space_, members);
    return 2.0 * r_prime;
  }

  std::optional<CrushingStep> try_target(Index y, Index b) {
    const Index a[] = {y};
    CrushCheck check = crush_condition(space_, live_, a, b, scales_);
    if (!check.holds) return std::nullopt;
    return CrushingStep{{y}, b, std::move(check.certificate)};
  }

  std::optional<CrushingStep> find_step(Index center, Index y, double r_prime) {
    const double r_inf = scales_.r_inf();
    if (space_.kind() != MetricKind::euclidean) {
      std::vector<std::pair<double, Index>> candidates;
      space_.for_each_within(y, r_inf, [&](Index x, double d) {
        if (x != y && live_.contains(x) && space_(center, x) < r_prime) candidates.emplace_back(d, x);
        return true;
      });
      std::sort(candidates.begin(), candidates.end());
      for (const auto& [d, b] : candidates)
        if (auto step = try_target(y, b)) return step;
      return std::nullopt;
    }

    // Target location on the segment towards the centre.
    const int dim = space_.coordinate_dim();
    const auto py = space_.point(y);
    const auto pc = space_.point(center);
    std::vector<double> target(py.begin(), py.end());
    if (r_prime > 0.0) {
      const double shift = std::min(r_inf * r_inf / (2.0 * r_prime), r_prime);
      for (int k = 0; k < dim; ++k) target[k] = py[k] + (pc[k] - py[k]) * (shift / r_prime);
    }
    const double reach = space_.distance_to_point(target, y) + r_inf;
    double inner = 0.0;
    double outer = std::max(r_inf / 64.0, 1e-12);
    std::vector<std::pair<double, Index>> ring;
    while (inner < reach) {
      ring.clear();
      space_.for_each_within_point(target, outer, [&](Index x, double d) {
        if (d >= inner && x != y && live_.contains(x) && space_(y, x) < r_inf) ring.emplace_back(d, x);
        return true;
      });
      std::sort(ring.begin(), ring.end());
      for (const auto& [d, b] : ring)
        if (auto step = try_target(y, b)) return step;
      inner = outer;
      outer *= 2.0;
    }
    return std::nullopt;
  }

  const FiniteMetricSpace& space_;
  LiveSet live_;
  const ScaleSequence& scales_;
  CrushOptions options_;
  IndexSet order_;
};

CrushResult run_exhaustive(const FiniteMetricSpace& space, LiveSet live, const ScaleSequence& scales,
                           const CrushOptions& options) {
  CrushResult result;
  const double r_inf = scales.r_inf();
  while (live.size() > 1) {
    const IndexSet members = live.members();
    std::optional<CrushingStep> found;
    for (Index a : members) {
      for (Index b : members) {
        if (a == b || !(space(a, b) < r_inf)) continue;
        const Index crushed[] = {a};
        CrushCheck check = crush_condition(space, live, crushed, b, scales);
        if (check.holds) {
          found = CrushingStep{{a}, b, std::move(check.certificate)};
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    live.erase(found->crushed.front());
    if (!options.keep_certificates) found->certificate.clear();
    result.steps.push_back(std::move(*found));
  }
  result.terminal = live.members();
  result.terminal_diameter = diameter(space, result.terminal);
  result.success = result.terminal_diameter < r_inf;
  if (!result.success)
    result.reason = "no admissible pair among " + std::to_string(result.terminal.size()) +
                    " live points of diameter " + std::to_string(result.terminal_diameter);
  return result;
}

}  // namespace

CrushCheck crush_condition(const FiniteMetricSpace& space, const LiveSet& live,
                           std::span<const Index> crushed, Index target, const ScaleSequence& scales) {
  require_step_shape(live, crushed, target);
  CrushCheck check;
  const auto radii = scales.distinct_values();
  const double r_min = radii.back();
  for (Index a : crushed) {
    // a itself lies in every ball around a.
    if (!(space(a, target) < r_min)) {
      check.failing_center = a;
      check.witness = a;
      check.failing_radius = r_min;
      check.certificate.clear();
      return check;
    }
    for (double r : radii) {
      std::size_t count = 0;
      std::optional<Index> bad;
      space.for_each_within(a, r, [&](Index x, double) {
        if (!live.contains(x)) return true;
        ++count;
        if (!(space(x, target) < r)) {
          bad = x;
          return false;
        }
        return true;
      });
      if (bad) {
        check.failing_center = a;
        check.witness = bad;
        check.failing_radius = r;
        check.certificate.clear();
        return check;
      }
      check.certificate.push_back({a, r, count});
    }
  }
  check.holds = true;
  return check;
}

void apply_crush(const FiniteMetricSpace& space, LiveSet& live, const CrushingStep& step,
                 const ScaleSequence& scales) {
  const CrushCheck check = crush_condition(space, live, step.crushed, step.target, scales);
  if (!check.holds)
    throw PreconditionError("crushing step into " + std::to_string(step.target) +
                            " fails: point " + std::to_string(*check.witness) + " lies in B(" +
                            std::to_string(*check.failing_center) + ", " +
                            std::to_string(check.failing_radius) + ") but not in the target ball");
  for (Index a : step.crushed) live.erase(a);
}

IndexSet apply_crush(const FiniteMetricSpace& space, std::span<const Index> live,
                     const CrushingStep& step, const ScaleSequence& scales) {
  LiveSet set(space.size(), live);
  apply_crush(space, set, step, scales);
  return set.members();
}

ContiguityReport contiguity_certificate(const FiniteMetricSpace& space, const LiveSet& live,
                                        const CrushingStep& step, const ScaleSequence& scales,
                                        int dim_cap) {
  ContiguityReport report;
  if (step.crushed.empty()) return report;
  if (step.crushed.size() != 1) throw PreconditionError("contiguity certificate needs an elementary step");
  const Index a = step.crushed.front();
  const Index b = step.target;
  const double r1 = scales.first();
  std::vector<Index> neighbours;
  space.for_each_within(a, r1, [&](Index x, double) {
    if (x != a && live.contains(x)) neighbours.push_back(x);
    return true;
  });
  std::sort(neighbours.begin(), neighbours.end());

  std::vector<Index> sigma{a};
  std::vector<Index> scratch;
  auto check_sigma = [&]() {
    ++report.simplices_checked;
    if (std::find(sigma.begin(), sigma.end(), b) != sigma.end()) return true;
    scratch = sigma;
    scratch.push_back(b);
    if (is_simplex(space, scratch, scales)) return true;
    report.holds = false;
    report.violation = normalized(sigma);
    return false;
  };
  auto extend = [&](auto&& self, std::size_t from) -> bool {
    for (std::size_t k = from; k < neighbours.size(); ++k) {
      const Index u = neighbours[k];
      bool adjacent = true;
      for (std::size_t s = 1; s < sigma.size() && adjacent; ++s) adjacent = space(sigma[s], u) < r1;
      if (!adjacent) continue;
      sigma.push_back(u);
      if (is_simplex(space, sigma, scales)) {
        if (!check_sigma()) return false;
        if (static_cast<int>(sigma.size()) <= dim_cap && !self(self, k + 1)) return false;
      }
      sigma.pop_back();
    }
    return true;
  };
  if (!check_sigma()) return report;
  if (dim_cap >= 1) extend(extend, 0);
  return report;
}

CrushResult greedy_crushable_on(const FiniteMetricSpace& space, std::span<const Index> live,
                                const ScaleSequence& scales, const CrushOptions& options) {
  LiveSet set(space.size(), live);
  if (set.empty()) throw PreconditionError("cannot crush an empty set");
  if (options.strategy == CrushStrategy::exhaustive) return run_exhaustive(space, std::move(set), scales, options);
  return FarthestFirst(space, std::move(set), scales, options).run();
}

CrushResult greedy_crushable(const FiniteMetricSpace& space, const ScaleSequence& scales,
                             const CrushOptions& options) {
  const IndexSet all = iota_set(space.size());
  return greedy_crushable_on(space, all, scales, options);
}

SequenceCheck verify_sequence(const FiniteMetricSpace& space, std::span<const Index> initial,
                              std::span<const CrushingStep> steps, const ScaleSequence& scales) {
  SequenceCheck out;
  LiveSet live(space.size(), initial);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    try {
      apply_crush(space, live, steps[k], scales);
    } catch (const PreconditionError& e) {
      out.valid = false;
      out.failing_step = k;
      out.reason = e.what();
      return out;
    }
  }
  const double d = live_diameter(space, live);
  if (!(d < scales.r_inf())) {
    out.valid = false;
    out.failing_step = steps.size();
    out.reason = "terminal diameter " + std::to_string(d) + " is not below r_inf";
  }
  return out;
}

double delta1(double r_inf, double r_prime) {
  if (!(r_inf > 0.0) || !std::isfinite(r_inf)) throw PreconditionError("r_inf must be positive");
  if (!(2.0 * r_prime * r_prime >= r_inf * r_inf * (1.0 - 1e-12)) || !std::isfinite(r_prime))
    throw PreconditionError("delta1 needs r' >= r_inf / sqrt(2)");
  const double q = std::max(0.0, 1.0 - r_inf * r_inf / (4.0 * r_prime * r_prime));
  return r_inf * (1.0 - std::sqrt(q));
}

double delta1_prime(double r_inf, double alpha, double divisor) {
  if (!(divisor >= 8.0)) throw PreconditionError("divisor must be >= 8");
  if (!(alpha >= r_inf)) throw PreconditionError("delta1_prime needs alpha >= r_inf");
  return delta1(r_inf, alpha) / divisor;
}

Index one_center(const FiniteMetricSpace& space, std::span<const Index> live) {
  if (live.empty()) throw PreconditionError("one_center needs a non-empty set");
  Index best = live.front();
  double best_ecc = std::numeric_limits<double>::infinity();
  for (Index c : live) {
    double ecc = 0.0;
    for (Index x : live) {
      ecc = std::max(ecc, space(c, x));
      if (ecc >= best_ecc) break;
    }
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = c;
    }
  }
  return best;
}

}  // namespace srips
