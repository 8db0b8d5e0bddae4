#include "srips/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "srips/crushing.hpp"
#include "srips/homology.hpp"
#include "srips/sampler.hpp"
#include "srips/selective_rips.hpp"

namespace srips {

namespace {

std::string betti_text(const std::vector<std::size_t>& b) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ')';
  return os.str();
}

std::string simplex_text(const Simplex& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace

IndexSet greedy_net(const FiniteMetricSpace& space, double spacing, Index start) {
  if (!(spacing > 0.0)) throw PreconditionError("net spacing must be positive");
  if (space.empty()) return {};
  if (start >= space.size()) throw PreconditionError("net start index out of range");
  IndexSet net;
  const auto n = static_cast<Index>(space.size());
  for (Index step = 0; step < n; ++step) {
    const Index x = (start + step) % n;
    const bool far = std::all_of(net.begin(), net.end(), [&](Index c) { return space(c, x) >= spacing; });
    if (far) net.push_back(x);
  }
  std::sort(net.begin(), net.end());
  return net;
}

ReconstructionReport run_reconstruction(const ReconstructionConfig& config) {
  if (config.points < 3) throw PreconditionError("the model circle needs at least 3 points");
  if (config.m < 2) throw PreconditionError("m must be at least 2");
  const int cap = config.dim_cap;
  ReconstructionReport r;

  SampleSpec spec;
  spec.shape = CircleShape{config.circle_radius, true};
  spec.count = config.points;
  r.model = sample(spec);
  r.star_radius = r.model.star_radius();
  if (!(config.alpha > 0.0 && config.alpha < r.star_radius / 2.0))
    throw PreconditionError("alpha must lie in (0, star radius / 2)");

  r.centers = greedy_net(r.model, config.alpha / 2.0);
  const auto mu = mu_margin(r.model, r.centers, config.alpha, config.size_cap);
  if (!mu) throw PreconditionError("alpha equals a critical radius of the centres");
  r.mu = *mu;
  r.epsilon0 = config.alpha / 4.0;
  r.delta1_prime = delta1_prime(r.epsilon0 / static_cast<double>(config.m), config.alpha, config.divisor);
  r.leverage = leverage_margins(r.model, r.centers, config.alpha);
  const double delta2 = r.delta1_prime / 2.0;
  r.delta2_prime = std::min({delta2 / 2.0, r.leverage.lower, r.leverage.upper});
  r.delta = std::min({r.delta2_prime, config.alpha / 8.0, r.mu / 2.0});
  r.scales_in_window = config.scales.first() < r.epsilon0 &&
                       config.scales.r_inf() > r.epsilon0 / static_cast<double>(config.m);

  // Y: angles jittered uniformly in [-j, j] (arc length j on the circle).
  r.jitter = config.jitter ? *config.jitter : config.jitter_fraction * r.delta;
  if (!(r.jitter >= 0.0)) throw PreconditionError("jitter must be non-negative");
  std::vector<double> angles(config.points);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t k = 0; k < config.points; ++k) {
    const double base = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(config.points);
    angles[k] = base + unit(rng) * r.jitter / config.circle_radius;
  }
  r.perturbed = FiniteMetricSpace::circle_geodesic(std::move(angles), config.circle_radius)
                    .with_star_radius(r.star_radius);

  const auto corr = identity_correspondence(config.points);
  const double slack = distortion(r.model, r.perturbed, corr) / 2.0;
  const auto u = glue(r.model, r.perturbed, corr, slack);
  r.gh_bound = gh_upper_bound(u);
  r.gh_below_delta = r.gh_bound < r.delta;

  const Cover c_model = build_cover(r.model, r.centers, config.alpha);
  const Cover c_bar = build_cover(u, r.centers, config.alpha);
  const auto nerve_c = nerve_complex(c_model, config.size_cap);
  const auto nerve_bar = nerve_complex(c_bar, config.size_cap);

  // (i)
  r.model_betti = model_betti(spec.shape, cap);
  r.nerve_betti = betti(nerve_c, cap);
  {
    LinkResult link{"model-vs-nerve", r.nerve_betti == r.model_betti, ""};
    link.detail = "model " + betti_text(r.model_betti) + ", nerve " + betti_text(r.nerve_betti);
    if (!c_model.covering) {
      link.pass = false;
      link.detail += ", the balls do not cover the model";
    }
    r.links.push_back(std::move(link));
  }

  // (ii)
  r.iso = nerve_iso_check(c_model, c_bar, config.size_cap);
  r.intersections = intersection_hausdorff(u, r.centers, config.alpha, config.size_cap);
  {
    const double limit = r.delta1_prime / 2.0;
    LinkResult link{"nerve-vs-perturbed-nerve", false, ""};
    link.pass = r.iso.isomorphic && r.intersections.mismatches == 0 && r.intersections.max_hausdorff < limit;
    std::ostringstream os;
    os << "isomorphic " << (r.iso.isomorphic ? "yes" : "no");
    if (r.iso.first_mismatch)
      os << " (first mismatch " << simplex_text(*r.iso.first_mismatch) << " in the "
         << (r.iso.mismatch_in_left ? "model" : "perturbed") << " nerve)";
    os << ", one-sided empty intersections " << r.intersections.mismatches
       << ", max intersection Hausdorff " << r.intersections.max_hausdorff << " vs " << limit;
    link.detail = os.str();
    r.links.push_back(std::move(link));
  }

  // (iii) Nerve(W): a family of complexes meets iff their vertex sets meet.
  std::vector<SimplicialComplex> w;
  Cover w_cover = c_bar;
  for (std::size_t k = 0; k < c_bar.elements.size(); ++k) {
    w.push_back(build_complex_on(c_bar.ambient, c_bar.elements[k], config.scales, 0));
    IndexSet vertices;
    for (const auto& v : w.back().simplices(0)) vertices.push_back(v.front());
    w_cover.elements[k] = std::move(vertices);
  }
  const auto nerve_w = nerve_complex(w_cover, config.size_cap);
  r.nerve_w_betti = betti(nerve_w, cap);
  r.links.push_back({"perturbed-nerve-vs-complex-nerve", nerve_w == nerve_bar,
                     nerve_w == nerve_bar ? "equal" : "the nerves differ"});

  // (iv)
  const auto y_complex = build_complex(r.perturbed, config.scales, cap + 1);
  r.srips_counts = y_complex.counts();
  r.srips_betti = betti(y_complex, cap);
  r.good_cover = good_cover_check(c_bar, config.scales, cap, config.size_cap);
  const auto outside = simplex_outside_cover(c_bar, y_complex);
  r.lebesgue = c_bar.covering ? lebesgue_number(c_bar) : -std::numeric_limits<double>::infinity();
  {
    LinkResult link{"nerve-vs-complex", false, ""};
    link.pass = c_bar.covering && !outside && r.good_cover.good() && r.srips_betti == r.nerve_w_betti;
    std::ostringstream os;
    os << "complex " << betti_text(r.srips_betti) << ", nerve " << betti_text(r.nerve_w_betti)
       << ", intersections crushable " << r.good_cover.crushable << " homology-trivial "
       << r.good_cover.homology_trivial << " suspect " << r.good_cover.suspect
       << ", identity " << (r.good_cover.identity_holds ? "holds" : "fails");
    if (!c_bar.covering) os << ", the traces do not cover Y";
    if (outside) os << ", simplex " << simplex_text(*outside) << " lies in no element";
    link.detail = os.str();
    r.links.push_back(std::move(link));
  }

  r.all_pass = std::all_of(r.links.begin(), r.links.end(), [](const LinkResult& l) { return l.pass; });
  return r;
}

}  // namespace srips
