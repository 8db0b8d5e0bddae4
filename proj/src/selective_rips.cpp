#include "srips/selective_rips.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace srips {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxVertices = 64;

Mask bit(std::size_t v) { return Mask{1} << v; }

// Backtracking k-colouring, most-saturated vertex first, a fresh colour
// tried only once per level.
class Colorer {
 public:
  Colorer(const Mask* adj, std::size_t k) : adj_(adj), k_(k) {}

  bool solve(Mask uncolored, Mask colored, std::size_t used) {
    if (!uncolored) return true;
    std::size_t pick = 0;
    int best_sat = -1;
    int best_deg = -1;
    Mask pick_forbidden = 0;
    for (Mask rest = uncolored; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      Mask forbidden = 0;
      for (Mask nb = adj_[v] & colored; nb; nb &= nb - 1)
        forbidden |= bit(color_[std::countr_zero(nb)]);
      const int sat = std::popcount(forbidden);
      const int deg = std::popcount(adj_[v] & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
        pick_forbidden = forbidden;
      }
    }
    if (static_cast<std::size_t>(best_sat) >= k_) return false;
    const std::size_t limit = std::min(used + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      if (pick_forbidden & bit(c)) continue;
      color_[pick] = c;
      if (solve(uncolored & ~bit(pick), colored | bit(pick), std::max(used, c + 1))) return true;
    }
    return false;
  }

 private:
  const Mask* adj_;
  std::size_t k_;
  std::size_t color_[kMaxVertices] = {};
};

bool colorable(const Mask* adj, std::size_t n, std::size_t k) {
  Mask remaining = n == kMaxVertices ? ~Mask{0} : bit(n) - 1;
  while (remaining) {
    // Grow one connected component.
    Mask component = remaining & (~remaining + 1);
    Mask frontier = component;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= remaining & ~component;
      component |= next;
      frontier = next;
    }
    remaining &= ~component;
    if (static_cast<std::size_t>(std::popcount(component)) <= k) continue;
    if (k == 1) {
      // Any edge inside the component defeats a single colour.
      return false;
    }
    Colorer colorer(adj, k);
    if (!colorer.solve(component, 0, 0)) return false;
  }
  return true;
}

std::vector<double> distance_table(const FiniteMetricSpace& space, std::span<const Index> simplex) {
  const std::size_t k = simplex.size();
  std::vector<double> table(k * k, 0.0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      table[a * k + b] = table[b * k + a] = space(simplex[a], simplex[b]);
  return table;
}

bool violates(double d, double bound, Bound mode) {
  return mode == Bound::strict ? !(d < bound) : d > bound;
}

bool is_simplex_table(std::span<const double> table, std::size_t k, const ScaleSequence& scales,
                      Bound mode) {
  for (std::size_t i = 1; i < k; ++i)
    if (!admits_partition_table(table, k, i, scales(i), mode)) return false;
  return true;
}

class Enumerator {
 public:
  Enumerator(const FiniteMetricSpace& space, const ScaleSequence& scales, int dim_cap,
             std::span<const Index> live)
      : space_(space), scales_(scales), dim_cap_(dim_cap), layers_(dim_cap + 1) {
    const double r1 = scales.first();
    std::vector<char> is_live(space.size(), 0);
    for (Index v : live) is_live[v] = 1;
    up_.resize(space.size());
    for (Index v : live) {
      auto& nb = up_[v];
      space.for_each_within(v, r1, [&](Index u, double) {
        if (u > v && is_live[u]) nb.push_back(u);
        return true;
      });
      std::sort(nb.begin(), nb.end());
    }
    live_.assign(live.begin(), live.end());
  }

  std::vector<std::vector<Simplex>> run() {
    for (Index v : live_) {
      Simplex s{v};
      layers_[0].push_back(s);
      if (dim_cap_ >= 1) extend(s, up_[v]);
    }
    return std::move(layers_);
  }

 private:
  void extend(Simplex& s, const std::vector<Index>& candidates) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Index u = candidates[c];
      s.push_back(u);
      const std::size_t k = s.size();
      // Table for the grown simplex: reuse the parent rows.
      table_.resize(k * k);
      for (std::size_t a = 0; a < k; ++a) {
        table_[a * k + a] = 0.0;
        for (std::size_t b = a + 1; b < k; ++b) {
          const double d = space_(s[a], s[b]);
          table_[a * k + b] = table_[b * k + a] = d;
        }
      }
      if (is_simplex_table(table_, k, scales_, Bound::strict)) {
        layers_[k - 1].push_back(s);
        if (static_cast<int>(k) <= dim_cap_) {
          std::vector<Index> next;
          const auto& nb = up_[u];
          std::set_intersection(candidates.begin() + static_cast<long>(c) + 1, candidates.end(),
                                nb.begin(), nb.end(), std::back_inserter(next));
          if (!next.empty()) extend(s, next);
        }
      }
      s.pop_back();
    }
  }

  const FiniteMetricSpace& space_;
  const ScaleSequence& scales_;
  int dim_cap_;
  std::vector<std::vector<Index>> up_;
  std::vector<Index> live_;
  std::vector<std::vector<Simplex>> layers_;
  std::vector<double> table_;
};

}  // namespace

bool admits_partition_table(std::span<const double> table, std::size_t k, std::size_t parts,
                            double bound, Bound mode) {
  if (k == 0) throw PreconditionError("admits_partition needs a non-empty simplex");
  if (parts == 0) throw PreconditionError("admits_partition needs at least one part");
  if (k <= parts) return true;
  if (k > kMaxVertices) throw PreconditionError("simplices above 64 vertices are not supported");
  Mask adj[kMaxVertices] = {};
  bool any = false;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (violates(table[a * k + b], bound, mode)) {
        adj[a] |= bit(b);
        adj[b] |= bit(a);
        any = true;
      }
  if (!any) return true;
  return colorable(adj, k, parts);
}

bool admits_partition(const FiniteMetricSpace& space, std::span<const Index> simplex,
                      std::size_t parts, double bound, Bound mode) {
  if (simplex.empty()) throw PreconditionError("admits_partition needs a non-empty simplex");
  const auto table = distance_table(space, simplex);
  return admits_partition_table(table, simplex.size(), parts, bound, mode);
}

bool is_simplex(const FiniteMetricSpace& space, std::span<const Index> simplex,
                const ScaleSequence& scales, Bound mode) {
  if (simplex.empty()) throw PreconditionError("is_simplex needs a non-empty simplex");
  const auto table = distance_table(space, simplex);
  return is_simplex_table(table, simplex.size(), scales, mode);
}

SimplicialComplex build_complex_on(const FiniteMetricSpace& space, std::span<const Index> live,
                                   const ScaleSequence& scales, int dim_cap,
                                   const BuildOptions& options) {
  if (dim_cap < 0) throw PreconditionError("dimension cap must be >= 0");
  if (static_cast<std::size_t>(dim_cap) + 1 > options.max_simplex_size)
    throw PreconditionError("dimension cap " + std::to_string(dim_cap) +
                            " exceeds the simplex size cap " +
                            std::to_string(options.max_simplex_size));
  Enumerator e(space, scales, dim_cap, live);
  return SimplicialComplex::from_sorted_layers(space.size(), e.run());
}

SimplicialComplex build_complex(const FiniteMetricSpace& space, const ScaleSequence& scales,
                                int dim_cap, const BuildOptions& options) {
  const IndexSet all = iota_set(space.size());
  return build_complex_on(space, all, scales, dim_cap, options);
}

SimplicialComplex build_rips(const FiniteMetricSpace& space, double r, int dim_cap) {
  return build_complex(space, ScaleSequence::constant(r), dim_cap);
}

double cluster_width_table(std::span<const double> table, std::size_t k, std::size_t i) {
  if (i < 1 || i >= k) throw PreconditionError("cluster_width needs 1 <= i < |simplex|");
  std::vector<double> values;
  values.reserve(k * (k - 1) / 2);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) values.push_back(table[a * k + b]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  // Feasibility is monotone in the bound and changes only at pair distances.
  std::size_t lo = 0;
  std::size_t hi = values.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (admits_partition_table(table, k, i, values[mid], Bound::inclusive))
      hi = mid;
    else
      lo = mid + 1;
  }
  return values[lo];
}

double cluster_width(const FiniteMetricSpace& space, std::span<const Index> simplex, std::size_t i) {
  if (simplex.empty()) throw PreconditionError("cluster_width needs a non-empty simplex");
  const auto table = distance_table(space, simplex);
  return cluster_width_table(table, simplex.size(), i);
}

}  // namespace srips
