// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance [--only 1,4] [--expect-red 6]
// Exit status is non-zero when a criterion fails that is not listed in --expect-red.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "srips/cli.hpp"
#include "srips/crushing.hpp"
#include "srips/filtration.hpp"
#include "srips/homology.hpp"
#include "srips/nerve.hpp"
#include "srips/reconstruction.hpp"
#include "srips/sampler.hpp"
#include "srips/selective_rips.hpp"
#include "srips/union_crushing.hpp"

using namespace srips;

namespace {

constexpr double kDelta1Tolerance = 1e-9;
constexpr double kDelta1ClosedFormTolerance = 1e-12;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Wall-clock budgets in seconds; kInfinity = none.
constexpr double kBudget[12] = {0, 10, 30, 1, 60, 60, 120, 120, kInfinity, kInfinity, kInfinity, kInfinity};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<oracle::Vertices> as_vertices(const SimplicialComplex& k) {
  std::vector<oracle::Vertices> out;
  for (const auto& s : k.all()) out.emplace_back(s.begin(), s.end());
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  s << ')';
  return s.str();
}

FiniteMetricSpace circle60() { return sample(parse_sample_spec("circle:r=1,n=60")); }

// ---------------------------------------------------------------------------

Outcome rips_coincidence() {
  std::mt19937_64 rng(101);
  constexpr int kCap = 4;
  const double quantiles[] = {0.05, 0.15, 0.3, 0.5, 0.7};
  std::size_t compared = 0, mismatches = 0, simplices = 0;
  for (int t = 0; t < 25; ++t) {
    const auto d = oracle::random_metric(20, rng);
    const auto x = build_space(d);
    std::vector<double> all;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) all.push_back(d[i][j]);
    std::sort(all.begin(), all.end());
    for (double q : quantiles) {
      const double r = all[static_cast<std::size_t>(q * static_cast<double>(all.size()))];
      const auto expected = oracle::flag_complex(d, r, kCap);
      const auto selective = as_vertices(build_complex(x, ScaleSequence::constant(r), kCap));
      const auto rips = as_vertices(build_rips(x, r, kCap));
      ++compared;
      simplices += expected.size();
      if (selective != expected || rips != expected) ++mismatches;
    }
  }
  std::ostringstream s;
  s << compared << " complexes (" << simplices << " simplices), " << mismatches << " mismatches";
  return {mismatches == 0 && compared == 125, s.str()};
}

Outcome membership_oracle() {
  std::mt19937_64 rng(202);
  const auto d = oracle::random_metric(14, rng);
  const auto x = build_space(d);
  double dmax = 0;
  for (const auto& row : d) dmax = std::max(dmax, *std::max_element(row.begin(), row.end()));
  std::uniform_int_distribution<int> size(1, 8), length(1, 8);
  std::uniform_real_distribution<double> radius(0.05, dmax * 1.05);
  std::size_t yes = 0, no = 0, disagree = 0;
  for (int t = 0; t < 500; ++t) {
    std::vector<std::uint32_t> pool(d.size());
    std::iota(pool.begin(), pool.end(), 0u);
    std::shuffle(pool.begin(), pool.end(), rng);
    oracle::Vertices sigma(pool.begin(), pool.begin() + size(rng));
    std::sort(sigma.begin(), sigma.end());
    std::vector<double> scales(static_cast<std::size_t>(length(rng)));
    for (auto& r : scales) r = radius(rng);
    std::sort(scales.rbegin(), scales.rend());
    const IndexSet s(sigma.begin(), sigma.end());
    const bool got = is_simplex(x, s, ScaleSequence(scales));
    const bool want = oracle::partition_member(d, sigma, scales);
    (want ? yes : no) += 1;
    if (got != want) ++disagree;
  }
  std::ostringstream s;
  s << "500 simplices (" << yes << " members, " << no << " non-members), " << disagree << " disagreements";
  return {disagree == 0 && yes > 0 && no > 0, s.str()};
}

Outcome counterexample() {
  cli::CounterexampleConfig config;
  config.n = 3;
  config.scales = ScaleSequence({1.0, 0.3, 0.07, 0.01});
  const auto r = cli::run_counterexample(config);
  CrushOptions exhaustive;
  exhaustive.strategy = CrushStrategy::exhaustive;
  const auto e = greedy_crushable(r.space, r.scales, exhaustive);
  const bool pass = r.top_simplices == 0 && r.betti == std::vector<std::size_t>{1, 0, 1, 0} &&
                    !r.crush.success && !e.success;
  std::ostringstream s;
  s << "3-simplices " << r.top_simplices << ", betti " << join(r.betti) << ", farthest-first "
    << (r.crush.success ? "crushed" : "failed") << ", exhaustive " << (e.success ? "crushed" : "failed");
  return {pass, s.str()};
}

Outcome reconstruction() {
  const auto r = run_reconstruction({});
  // Independent Betti numbers of sRips(Y; (0.6, 0.4)).
  const auto k = build_complex(r.perturbed, ScaleSequence({0.6, 0.4}), 4);
  const auto dense = oracle::dense_betti(as_vertices(k), 3);
  const std::vector<std::size_t> circle{1, 1, 0, 0};
  const bool pass = r.srips_betti == circle && dense == circle && r.gh_below_delta && r.all_pass;
  std::ostringstream s;
  s << "betti " << join(r.srips_betti) << " (dense " << join(dense) << "), gh " << r.gh_bound << " < delta "
    << r.delta << ", links " << (r.all_pass ? "all pass" : "FAILED");
  for (const auto& link : r.links)
    if (!link.pass) s << " [" << link.name << ": " << link.detail << "]";
  return {pass, s.str()};
}

Outcome functoriality() {
  const auto rec = run_reconstruction({});
  const ScaleSequence small({0.45, 0.3}), big({0.6, 0.4});
  const ScaleSequence profile({1.0, 2.0 / 3.0});
  constexpr double kLow = 0.45, kHigh = 0.6;
  bool pass = true;
  std::ostringstream s;
  for (const auto* space : {&rec.model, &rec.perturbed}) {
    const auto a = build_complex(*space, small, 2);
    const auto b = build_complex(*space, big, 2);
    const auto ba = betti(a, 1), bb = betti(b, 1);
    std::vector<std::size_t> ranks;
    for (int dim = 0; dim <= 1; ++dim) {
      ranks.push_back(induced_rank(a, b, dim));
      pass = pass && ranks.back() == ba[dim] && ranks.back() == bb[dim];
    }
    const auto bars = persistence(build_filtration(*space, profile, 2, 1.2), 1);
    bool spans = false;
    for (const auto& bar : bars.in_dim(1)) spans = spans || (bar.birth < kLow && bar.death >= kHigh);
    pass = pass && spans;
    s << (space == &rec.model ? "X" : "; Y") << ": ranks " << join(ranks) << " betti " << join(ba) << "/"
      << join(bb) << ", window bar " << (spans ? "yes" : "no");
  }
  return {pass, s.str()};
}

// Sampled contiguity on a crushing sequence: every `stride`-th step up to dim_cap.
ContiguityReport sampled_contiguity(const FiniteMetricSpace& g, const std::vector<CrushingStep>& steps,
                                    const ScaleSequence& scales, std::size_t stride, int dim_cap,
                                    std::size_t& sampled) {
  LiveSet live(g.size(), true);
  ContiguityReport total;
  sampled = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (k % stride == 0) {
      const auto c = contiguity_certificate(g, live, steps[k], scales, dim_cap);
      ++sampled;
      total.simplices_checked += c.simplices_checked;
      if (!c.holds && total.holds) {
        total.holds = false;
        total.violation = c.violation;
      }
    }
    for (Index a : steps[k].crushed) live.erase(a);
  }
  return total;
}

bool connected(const FiniteMetricSpace& g, double reach) {
  std::vector<Index> parent(g.size());
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Index i = 0; i < g.size(); ++i)
    g.for_each_within(i, reach, [&](Index j, double) {
      parent[find(i)] = find(j);
      return true;
    });
  for (Index i = 0; i < g.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

Outcome dense_disc_crushing() {
  const ScaleSequence scales({0.5, 0.3});
  const double delta = delta1(0.3, 1.0);
  const auto grid = dense_disk_grid(1.0, delta);
  CrushOptions options;
  options.keep_certificates = false;
  const auto r = greedy_crushable(grid, scales, options);
  double terminal = 0.0;
  for (Index a : r.terminal)
    for (Index b : r.terminal) terminal = std::max(terminal, grid(a, b));
  const auto replay = verify_sequence(grid, iota_set(grid.size()), r.steps, scales);
  constexpr std::size_t kStride = 1024;
  std::size_t sampled = 0;
  const auto contiguity = sampled_contiguity(grid, r.steps, scales, kStride, 1, sampled);
  const bool b0 = connected(grid, std::min(scales.first(), 2 * delta));

  // The same checks in full on a coarse grid where the complex is small.
  const auto coarse = dense_disk_grid(1.0, 0.12);
  const auto rc = greedy_crushable(coarse, scales);
  std::size_t coarse_sampled = 0;
  const auto cc = sampled_contiguity(coarse, rc.steps, scales, 1, 3, coarse_sampled);
  const auto coarse_betti = betti(build_complex(coarse, scales, 3), 2);

  const bool every_step_contiguity = false;  // only sampled at this size
  const bool original_betti = false;         // not computed at this size
  const bool pass = r.success && terminal < 0.3 && replay.valid && contiguity.holds && every_step_contiguity &&
                    b0 && original_betti;
  std::ostringstream s;
  s << grid.size() << " points (delta1 " << delta << "): crush " << (r.success ? "ok" : "failed") << ", "
    << r.steps.size() << " steps, terminal diameter " << terminal << ", replay "
    << (replay.valid ? "ok" : replay.reason) << "; contiguity to dim 1 on " << sampled << " of "
    << r.steps.size() << " steps " << (contiguity.holds ? "holds" : "VIOLATED")
    << ", not checked on every step; beta_0 " << (b0 ? "1" : "?")
    << ", beta_1 and beta_2 of the original complex not computed (too large)"
    << " | coarse grid " << coarse.size() << " points: crush " << (rc.success ? "ok" : "failed")
    << ", contiguity to dim 3 on all " << coarse_sampled << " steps " << (cc.holds ? "holds" : "VIOLATED")
    << ", betti " << join(coarse_betti);
  return {pass, s.str()};
}

Outcome glued_crushing() {
  const ScaleSequence scales({0.5, 0.3});
  const auto grid = dense_disk_grid(1.0, delta1(0.3, 1.0));
  const double bound_target = 0.5 * delta1_prime(0.3, 1.0);
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> coords;
  const double amp = bound_target / std::numbers::sqrt2;
  for (Index i = 0; i < grid.size(); ++i)
    for (double c : grid.point(i)) coords.push_back(c + amp * unit(rng));
  const auto u = PseudoMetricUnion::ambient(grid, FiniteMetricSpace::euclidean(std::move(coords), 2));
  UnionCrushParams params;
  params.alpha = 1.0;
  params.keep_certificates = false;
  const auto r = crushable_in_union(u, scales, params);
  const auto replay = verify_sequence(u.right(), iota_set(u.right().size()), r.steps, scales);
  const bool pass = u.declared_bound() < r.delta1_prime && r.success && replay.valid;
  std::ostringstream s;
  s << "declared bound " << u.declared_bound() << " < delta1' " << r.delta1_prime << ", crush "
    << (r.success ? "ok" : r.reason) << ", " << r.steps.size() << " steps, replay "
    << (replay.valid ? "ok" : replay.reason) << ", far targets " << r.far_targets << ", skipped "
    << r.model_points_skipped;
  return {pass, s.str()};
}

Outcome delta1_formula() {
  double worst = 0.0;
  std::size_t points = 0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const double r_inf = 0.05 + 0.05 * i;
      const double r_prime = r_inf * (0.75 + 0.25 * j);
      worst = std::max(worst, std::abs(delta1(r_inf, r_prime) - oracle::two_disc_inscribed_radius(r_inf, r_prime)));
      ++points;
    }
  const double closed = std::abs(delta1(1.0, 1.0) - (1.0 - std::sqrt(3.0) / 2.0));
  std::ostringstream s;
  s << points << " grid points, max error " << worst << "; delta1(1,1) error " << closed;
  return {worst <= kDelta1Tolerance && closed <= kDelta1ClosedFormTolerance, s.str()};
}

// Exhaustive emptiness of every intersection of at most cap balls.
std::vector<bool> emptiness(const oracle::Matrix& d, const IndexSet& centers, double radius, std::size_t cap,
                            std::vector<Simplex>& sigmas) {
  std::vector<bool> out;
  sigmas.clear();
  const std::size_t m = centers.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > cap) continue;
    Simplex sigma;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) sigma.push_back(static_cast<Index>(k));
    bool meet = false;
    for (std::size_t z = 0; z < d.size() && !meet; ++z) {
      bool all = true;
      for (Index k : sigma) all = all && d[centers[k]][z] < radius;
      meet = all;
    }
    sigmas.push_back(sigma);
    out.push_back(!meet);
  }
  return out;
}

Outcome mu_margin_biconditional() {
  std::mt19937_64 rng(909);
  constexpr std::size_t kCap = 4;
  std::size_t covers = 0, sigmas_checked = 0, violations = 0, finite = 0, tight = 0;
  while (covers < 20) {
    const auto d = oracle::random_planar(30, rng);
    const auto x = build_space(d);
    std::vector<Index> pool(30);
    std::iota(pool.begin(), pool.end(), Index{0});
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
    IndexSet centers(pool.begin(), pool.begin() + static_cast<long>(m));
    std::sort(centers.begin(), centers.end());
    const double alpha = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
    const auto mu = mu_margin(x, centers, alpha, kCap);
    if (!mu) continue;
    ++covers;
    std::vector<Simplex> sigmas;
    const auto at_alpha = emptiness(d, centers, alpha, kCap, sigmas);
    const double grown = std::isfinite(*mu) ? alpha + *mu : alpha + 10.0;
    const auto at_grown = emptiness(d, centers, grown, kCap, sigmas);
    sigmas_checked += sigmas.size();
    for (std::size_t k = 0; k < sigmas.size(); ++k)
      if (at_alpha[k] != at_grown[k]) ++violations;
    if (std::isfinite(*mu)) {
      // mu is not wasteful: just past the next critical radius some sigma changes.
      ++finite;
      if (emptiness(d, centers, alpha + 2 * *mu + 1e-9, kCap, sigmas) != at_alpha) ++tight;
    }
  }
  std::ostringstream s;
  s << covers << " covers, " << sigmas_checked << " sigmas, " << violations << " violations; next critical radius at "
    << "alpha + 2 mu in " << tight << " of " << finite;
  return {violations == 0 && tight == finite, s.str()};
}

// Glues a space to itself with cross(x, y) = d(x, y) + eps.
PseudoMetricUnion self_glue(const FiniteMetricSpace& x, double eps) {
  std::vector<double> cross(x.size() * x.size());
  for (Index i = 0; i < x.size(); ++i)
    for (Index j = 0; j < x.size(); ++j) cross[static_cast<std::size_t>(i) * x.size() + j] = x(i, j) + eps;
  return PseudoMetricUnion::from_cross(x, x, std::move(cross), eps);
}

Outcome hausdorff_bound() {
  constexpr std::size_t kCap = 4;
  std::size_t below_runs = 0, below_bad = 0, above_runs = 0, above_missed = 0;
  auto check = [&](const FiniteMetricSpace& x, const IndexSet& centers, double alpha) {
    const auto lev = leverage_margins(x, centers, alpha);
    const double gap = critical_gap_below(x, centers, alpha, kCap);
    const auto mu = mu_margin(x, centers, alpha, kCap);
    if (!mu) return;
    const double margin = std::min({lev.lower, lev.upper, gap, *mu});
    const auto below = self_glue(x, 0.5 * margin);
    const auto rb = intersection_hausdorff(below, centers, alpha, kCap);
    ++below_runs;
    if (rb.mismatches != 0 || rb.max_hausdorff > below.declared_bound()) ++below_bad;
    if (std::isfinite(gap)) {
      const auto above = self_glue(x, 1.01 * gap);
      ++above_runs;
      if (intersection_hausdorff(above, centers, alpha, kCap).mismatches == 0) ++above_missed;
    }
  };
  const auto circle = circle60();
  const auto centers = greedy_net(circle, 0.35);
  check(circle, centers, 0.7);
  std::mt19937_64 rng(1010);
  for (int t = 0; t < 10; ++t) {
    const auto d = oracle::random_planar(25, rng);
    const auto x = build_space(d);
    check(x, greedy_net(x, 0.25), std::uniform_real_distribution<double>(0.2, 0.4)(rng));
  }
  // Jittered circle, glued along the identity with slack = distortion / 2.
  const auto lev = leverage_margins(circle, centers, 0.7);
  std::mt19937_64 jr(1111);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> angles;
  const double amp = 0.2 * std::min(lev.lower, lev.upper);
  for (int k = 0; k < 60; ++k) angles.push_back(2 * std::numbers::pi * k / 60 + amp * unit(jr));
  const auto y = FiniteMetricSpace::circle_geodesic(angles, 1.0);
  const auto corr = identity_correspondence(60);
  const auto u = glue(circle, y, corr, distortion(circle, y, corr) / 2);
  const auto rj = intersection_hausdorff(u, centers, 0.7, kCap);
  const bool jitter_ok = rj.mismatches == 0 && rj.max_hausdorff <= u.declared_bound();
  std::ostringstream s;
  s << "below margins: " << below_runs - below_bad << "/" << below_runs << " clean; above: " << above_runs - above_missed
    << "/" << above_runs << " detected; jittered circle " << (jitter_ok ? "clean" : "NOT clean") << " (max "
    << rj.max_hausdorff << " <= " << u.declared_bound() << ")";
  return {below_bad == 0 && above_missed == 0 && above_runs > 0 && below_runs > 0 && jitter_ok, s.str()};
}

struct TestSpace {
  std::string name;
  FiniteMetricSpace space;
  ScaleSequence scales;
  int dim_cap;
  double max_birth;
};

Outcome homology_engine() {
  std::vector<TestSpace> spaces;
  spaces.push_back({"circle", circle60(), ScaleSequence({0.6, 0.4}), 2, 1.3});
  {
    cli::CounterexampleConfig c;
    c.scales = ScaleSequence({1.0, 0.3, 0.07, 0.01});
    spaces.push_back({"spread points", cli::run_counterexample(c).space, *c.scales, 3, kInfinity});
  }
  spaces.push_back({"coarse disc", dense_disk_grid(1.0, 0.12), ScaleSequence({0.5, 0.3}), 2, 1.0});
  std::mt19937_64 rng(1212);
  for (int t = 0; t < 5; ++t)
    spaces.push_back({"random", build_space(oracle::random_planar(20, rng)), ScaleSequence({0.5, 0.35, 0.25}), 2, 1.5});

  std::size_t failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) first = what;
  };
  for (const auto& ts : spaces) {
    const auto k = build_complex(ts.space, ts.scales, ts.dim_cap + 1);
    if (!boundary_squared_vanishes(k)) fail(ts.name + ": boundary squared");
    const auto full = betti(k, k.dimension());
    long chi = 0;
    for (std::size_t p = 0; p < full.size(); ++p) chi += (p % 2 ? -1L : 1L) * static_cast<long>(full[p]);
    if (chi != euler_characteristic(k)) fail(ts.name + ": euler");
    const auto profile = ts.scales.scaled(1.0 / ts.scales.first());
    const auto f = build_filtration(ts.space, profile, ts.dim_cap + 1, ts.max_birth);
    const auto bars = persistence(f, ts.dim_cap);
    std::set<double> values;
    for (const auto& s : f.simplices()) values.insert(s.birth);
    const std::vector<double> v(values.begin(), values.end());
    for (std::size_t i = 0; i + 1 < v.size(); i += std::max<std::size_t>(1, v.size() / 25)) {
      const double mid = 0.5 * (v[i] + v[i + 1]);
      const auto b = betti(f.sublevel(mid), ts.dim_cap);
      for (int dim = 0; dim <= ts.dim_cap; ++dim)
        if (bars.rank_at(dim, mid) != b[dim]) fail(ts.name + ": persistence vs static");
    }
  }
  std::size_t filtrations = 0;
  for (int t = 0; t < 10; ++t) {
    const auto d = oracle::random_planar(15, rng);
    const auto x = build_space(d);
    const auto profile = t % 2 ? ScaleSequence::constant(1.0) : ScaleSequence({1.0, 0.6, 0.4});
    const auto f = build_filtration(x, profile, 3);
    std::vector<oracle::Vertices> s;
    std::vector<double> births;
    for (const auto& fs : f.simplices()) {
      s.emplace_back(fs.vertices.begin(), fs.vertices.end());
      births.push_back(fs.birth);
    }
    auto expected = oracle::dense_persistence(s, births);
    std::erase_if(expected, [](const oracle::Bar& b) { return b.dim > 2; });
    const auto got = persistence(f, 2, Reduction::clearing);
    bool same = got.intervals.size() == expected.size();
    for (std::size_t k = 0; same && k < expected.size(); ++k)
      same = got.intervals[k].dim == expected[k].dim && got.intervals[k].birth == expected[k].birth &&
             got.intervals[k].death == expected[k].death;
    if (!same) fail("barcode vs reference");
    ++filtrations;
  }
  std::ostringstream s;
  s << spaces.size() << " spaces, " << filtrations << " reference filtrations, " << failures << " failures";
  if (failures) s << " (first: " << first << ")";
  return {failures == 0, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only, expect_red;
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  app.add_option("--expect-red", expect_red, "criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Rips coincidence", rips_coincidence},
      {"membership oracle", membership_oracle},
      {"counterexample", counterexample},
      {"reconstruction", reconstruction},
      {"functoriality", functoriality},
      {"dense disc crushing", dense_disc_crushing},
      {"glued crushing", glued_crushing},
      {"delta1 formula", delta1_formula},
      {"mu margin", mu_margin_biconditional},
      {"intersection Hausdorff bound", hausdorff_bound},
      {"homology engine", homology_engine},
  };
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < kBudget[id];
    const bool pass = o.pass && in_budget;
    std::cout << (pass ? "PASS" : "FAIL") << ' ' << id << ' ' << criteria[k].first << " [" << std::fixed
              << std::setprecision(1) << seconds << "s";
    if (std::isfinite(kBudget[id])) std::cout << " of " << kBudget[id] << "s";
    std::cout << std::defaultfloat << std::setprecision(6) << "] " << o.detail << std::endl;
    const bool expected = std::find(expect_red.begin(), expect_red.end(), id) != expect_red.end();
    if (!pass && !expected) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
