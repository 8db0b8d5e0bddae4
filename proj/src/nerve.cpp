#include "srips/nerve.hpp"

#include <algorithm>
#include <cmath>

#include "srips/homology.hpp"
#include "srips/selective_rips.hpp"

namespace srips {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kExhaustiveCrushLimit = 64;

void finish_cover(Cover& c) {
  std::vector<char> hit(c.ambient.size(), 0);
  for (const auto& e : c.elements)
    for (Index x : e) hit[x] = 1;
  c.covering = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

void require_centers(std::span<const Index> centers, std::size_t n, double alpha) {
  if (centers.empty()) throw PreconditionError("a cover needs at least one centre");
  if (!(alpha > 0.0)) throw PreconditionError("cover radius must be positive");
  for (Index c : centers)
    if (c >= n) throw PreconditionError("centre index out of range");
}

// Visits every sigma (positions, increasing) of size <= cap for which
// extend(state, k) keeps the state alive; visit(sigma, state) is called for
// each. State is copied per level.
template <class State, class Extend, class Visit>
void enumerate_subsets(std::size_t count, std::size_t cap, const State& root, Extend&& extend,
                       Visit&& visit) {
  Simplex sigma;
  auto recurse = [&](auto&& self, const State& state, std::size_t from) -> void {
    for (std::size_t k = from; k < count; ++k) {
      State next = state;
      if (!extend(next, static_cast<Index>(k), sigma.empty())) continue;
      sigma.push_back(static_cast<Index>(k));
      visit(sigma, next);
      if (sigma.size() < cap) self(self, next, k + 1);
      sigma.pop_back();
    }
  };
  recurse(recurse, root, 0);
}

std::vector<std::vector<Simplex>> to_layers(std::vector<Simplex> simplices) {
  std::vector<std::vector<Simplex>> layers;
  for (auto& s : simplices) {
    if (layers.size() < s.size()) layers.resize(s.size());
    layers[s.size() - 1].push_back(std::move(s));
  }
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

}  // namespace

Cover build_cover(const FiniteMetricSpace& space, std::span<const Index> centers, double alpha) {
  require_centers(centers, space.size(), alpha);
  Cover c;
  c.ambient = space;
  c.centers.assign(centers.begin(), centers.end());
  c.radius = alpha;
  for (Index z : centers) {
    std::vector<double> row(space.size());
    IndexSet element;
    for (Index x = 0; x < space.size(); ++x) {
      row[x] = space(z, x);
      if (row[x] < alpha) element.push_back(x);
    }
    c.center_distance.push_back(std::move(row));
    c.elements.push_back(std::move(element));
  }
  finish_cover(c);
  return c;
}

Cover build_cover(const PseudoMetricUnion& u, std::span<const Index> left_centers, double alpha) {
  require_centers(left_centers, u.left().size(), alpha);
  Cover c;
  c.ambient = u.right();
  c.centers.assign(left_centers.begin(), left_centers.end());
  c.radius = alpha;
  for (Index z : left_centers) {
    std::vector<double> row(u.right().size());
    IndexSet element;
    for (Index j = 0; j < u.right().size(); ++j) {
      row[j] = u.cross(z, j);
      if (row[j] < alpha) element.push_back(j);
    }
    c.center_distance.push_back(std::move(row));
    c.elements.push_back(std::move(element));
  }
  finish_cover(c);
  return c;
}

SimplicialComplex nerve_complex(const Cover& cover, std::size_t size_cap) {
  std::vector<Simplex> simplices;
  enumerate_subsets(
      cover.elements.size(), size_cap, IndexSet{},
      [&](IndexSet& common, Index k, bool first) {
        common = first ? cover.elements[k] : set_intersection(common, cover.elements[k]);
        return !common.empty();
      },
      [&](const Simplex& sigma, const IndexSet&) { simplices.push_back(sigma); });
  return SimplicialComplex::from_sorted_layers(cover.centers.size(), to_layers(std::move(simplices)));
}

std::vector<CriticalRadius> critical_radii(const FiniteMetricSpace& space, std::span<const Index> centers,
                                           std::size_t size_cap) {
  if (size_cap < 1) throw PreconditionError("size cap must be >= 1");
  std::vector<CriticalRadius> out;
  const std::vector<double> root(space.size(), 0.0);
  enumerate_subsets(
      centers.size(), size_cap, root,
      [&](std::vector<double>& reach, Index k, bool) {
        for (Index z = 0; z < space.size(); ++z) reach[z] = std::max(reach[z], space(z, centers[k]));
        return true;
      },
      [&](const Simplex& sigma, const std::vector<double>& reach) {
        out.push_back({sigma, *std::min_element(reach.begin(), reach.end())});
      });
  std::sort(out.begin(), out.end(), [](const CriticalRadius& a, const CriticalRadius& b) {
    if (a.sigma.size() != b.sigma.size()) return a.sigma.size() < b.sigma.size();
    return a.sigma < b.sigma;
  });
  return out;
}

std::optional<double> mu_margin(const FiniteMetricSpace& space, std::span<const Index> centers,
                                double alpha, std::size_t size_cap) {
  double next = kInf;
  for (const auto& c : critical_radii(space, centers, size_cap)) {
    if (c.radius == alpha) return std::nullopt;
    if (c.radius > alpha) next = std::min(next, c.radius);
  }
  return next == kInf ? kInf : (next - alpha) / 2.0;
}

double critical_gap_below(const FiniteMetricSpace& space, std::span<const Index> centers, double alpha,
                          std::size_t size_cap) {
  double below = -kInf;
  for (const auto& c : critical_radii(space, centers, size_cap))
    if (c.radius < alpha) below = std::max(below, c.radius);
  return below == -kInf ? kInf : alpha - below;
}

LeverageMargins leverage_margins(const FiniteMetricSpace& space, std::span<const Index> centers,
                                 double alpha) {
  LeverageMargins m;
  for (Index z : centers) {
    for (Index y = 0; y < space.size(); ++y) {
      const double d = space(z, y);
      if (d < alpha)
        m.lower = std::min(m.lower, alpha - d);
      else
        m.upper = std::min(m.upper, d - alpha);
    }
  }
  return m;
}

IntersectionReport intersection_hausdorff(const PseudoMetricUnion& u, std::span<const Index> left_centers,
                                          double alpha, std::size_t size_cap) {
  require_centers(left_centers, u.left().size(), alpha);
  const auto& left = u.left();
  const auto& right = u.right();
  std::vector<IndexSet> left_balls;
  std::vector<IndexSet> right_traces;
  for (Index z : left_centers) {
    left_balls.push_back(ball(left, z, alpha));
    IndexSet trace;
    for (Index j = 0; j < right.size(); ++j)
      if (u.cross(z, j) < alpha) trace.push_back(j);
    right_traces.push_back(std::move(trace));
  }

  struct Pair {
    IndexSet left;
    IndexSet right;
  };
  IntersectionReport report;
  enumerate_subsets(
      left_centers.size(), size_cap, Pair{},
      [&](Pair& p, Index k, bool first) {
        p.left = first ? left_balls[k] : set_intersection(p.left, left_balls[k]);
        p.right = first ? right_traces[k] : set_intersection(p.right, right_traces[k]);
        return !p.left.empty() || !p.right.empty();
      },
      [&](const Simplex& sigma, const Pair& p) {
        IntersectionRecord rec;
        rec.sigma = sigma;
        rec.left_size = p.left.size();
        rec.right_size = p.right.size();
        if (!p.left.empty() && !p.right.empty()) {
          double h = 0.0;
          for (Index x : p.left) {
            double best = kInf;
            for (Index j : p.right) best = std::min(best, u.cross(x, j));
            h = std::max(h, best);
          }
          for (Index j : p.right) {
            double best = kInf;
            for (Index x : p.left) best = std::min(best, u.cross(x, j));
            h = std::max(h, best);
          }
          rec.hausdorff = h;
          report.max_hausdorff = std::max(report.max_hausdorff, h);
        }
        report.records.push_back(std::move(rec));
      });
  std::sort(report.records.begin(), report.records.end(),
            [](const IntersectionRecord& a, const IntersectionRecord& b) { return a.sigma < b.sigma; });
  for (const auto& rec : report.records) {
    if (!rec.mismatch()) continue;
    ++report.mismatches;
    if (!report.first_mismatch) report.first_mismatch = rec.sigma;
  }
  return report;
}

NerveIsoReport nerve_iso_check(const Cover& left, const Cover& right, std::size_t size_cap) {
  if (left.centers != right.centers) throw PreconditionError("covers must share the centre list");
  const auto a = nerve_complex(left, size_cap).all();
  const auto b = nerve_complex(right, size_cap).all();
  NerveIsoReport report;
  std::vector<Simplex> only_left;
  std::vector<Simplex> only_right;
  auto by_lex = [](const Simplex& x, const Simplex& y) { return x < y; };
  std::vector<Simplex> sa = a;
  std::vector<Simplex> sb = b;
  std::sort(sa.begin(), sa.end(), by_lex);
  std::sort(sb.begin(), sb.end(), by_lex);
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(only_left));
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(), std::back_inserter(only_right));
  if (only_left.empty() && only_right.empty()) return report;
  report.isomorphic = false;
  if (!only_left.empty() && (only_right.empty() || only_left.front() < only_right.front())) {
    report.first_mismatch = only_left.front();
    report.mismatch_in_left = true;
  } else {
    report.first_mismatch = only_right.front();
  }
  return report;
}

const char* to_string(CoverVerdict verdict) {
  switch (verdict) {
    case CoverVerdict::crushable: return "crushable";
    case CoverVerdict::homology_trivial: return "homology-trivial";
    case CoverVerdict::suspect: return "suspect";
  }
  return "suspect";
}

GoodCoverReport good_cover_check(const Cover& cover, const ScaleSequence& scales, int dim_cap,
                                 std::size_t size_cap) {
  const auto& space = cover.ambient;
  std::vector<SimplicialComplex> element_complex;
  for (const auto& e : cover.elements) element_complex.push_back(build_complex_on(space, e, scales, dim_cap + 1));

  std::vector<std::size_t> trivial(static_cast<std::size_t>(dim_cap) + 1, 0);
  trivial[0] = 1;
  GoodCoverReport report;
  enumerate_subsets(
      cover.elements.size(), size_cap, IndexSet{},
      [&](IndexSet& common, Index k, bool first) {
        common = first ? cover.elements[k] : set_intersection(common, cover.elements[k]);
        return !common.empty();
      },
      [&](const Simplex& sigma, const IndexSet& common) {
        GoodCoverRecord rec;
        rec.sigma = sigma;
        rec.size = common.size();
        const auto complex = build_complex_on(space, common, scales, dim_cap + 1);
        rec.betti = betti(complex, dim_cap);
        SimplicialComplex meet = element_complex[sigma.front()];
        for (std::size_t k = 1; k < sigma.size(); ++k) meet = intersection(meet, element_complex[sigma[k]]);
        rec.identity_holds = meet == complex;

        CrushOptions options;
        options.keep_certificates = false;
        CrushResult crush = greedy_crushable_on(space, common, scales, options);
        if (!crush.success && common.size() <= kExhaustiveCrushLimit) {
          options.strategy = CrushStrategy::exhaustive;
          crush = greedy_crushable_on(space, common, scales, options);
        }
        rec.crush_steps = crush.steps.size();
        const bool homology_trivial = rec.betti == trivial;
        if (crush.success && homology_trivial)
          rec.verdict = CoverVerdict::crushable;
        else if (homology_trivial)
          rec.verdict = CoverVerdict::homology_trivial;
        else
          rec.verdict = CoverVerdict::suspect;
        report.records.push_back(std::move(rec));
      });
  std::sort(report.records.begin(), report.records.end(),
            [](const GoodCoverRecord& a, const GoodCoverRecord& b) { return a.sigma < b.sigma; });
  for (const auto& rec : report.records) {
    switch (rec.verdict) {
      case CoverVerdict::crushable: ++report.crushable; break;
      case CoverVerdict::homology_trivial: ++report.homology_trivial; break;
      case CoverVerdict::suspect: ++report.suspect; break;
    }
    report.identity_holds = report.identity_holds && rec.identity_holds;
  }
  return report;
}

double lebesgue_number(const Cover& cover) {
  if (!cover.covering) throw PreconditionError("lebesgue_number needs a covering cover");
  double worst = kInf;
  for (Index x = 0; x < cover.ambient.size(); ++x) {
    double best = -kInf;
    for (const auto& row : cover.center_distance) best = std::max(best, cover.radius - row[x]);
    worst = std::min(worst, best);
  }
  return worst;
}

std::optional<Simplex> simplex_outside_cover(const Cover& cover, const SimplicialComplex& complex) {
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (const auto& s : complex.simplices(d)) {
      bool inside = false;
      for (const auto& row : cover.center_distance) {
        inside = std::all_of(s.begin(), s.end(), [&](Index v) { return row[v] < cover.radius; });
        if (inside) break;
      }
      if (!inside) return s;
    }
  }
  return std::nullopt;
}

}  // namespace srips
