#include "srips/filtration.hpp"

#include <algorithm>
#include <map>

#include "srips/selective_rips.hpp"

namespace srips {

namespace {

bool filtration_order(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

double birth_from_table(std::span<const double> table, std::size_t k, const ScaleSequence& profile) {
  double birth = 0.0;
  for (std::size_t i = 1; i < k; ++i)
    birth = std::max(birth, cluster_width_table(table, k, i) / profile(i));
  return birth;
}

}  // namespace

Filtration Filtration::from_simplices(std::size_t vertex_count,
                                      std::vector<FilteredSimplex> simplices) {
  Filtration f;
  f.vertex_count_ = vertex_count;
  std::map<Simplex, double> birth_of;
  for (auto& s : simplices) {
    const Simplex original = s.vertices;
    s.vertices = normalized(std::move(s.vertices));
    if (s.vertices.empty() || s.vertices.size() != original.size())
      throw ValidationError("filtration simplex is empty or has repeated vertices", original);
    if (s.vertices.back() >= vertex_count) throw ValidationError("vertex out of range", s.vertices);
    if (!(s.birth >= 0.0)) throw ValidationError("birth values must be >= 0", s.vertices);
    if (!birth_of.emplace(s.vertices, s.birth).second)
      throw ValidationError("duplicate simplex in filtration", s.vertices);
  }
  for (const auto& s : simplices) {
    if (s.vertices.size() < 2) continue;
    for (const auto& face : facets(s.vertices)) {
      const auto it = birth_of.find(face);
      if (it == birth_of.end()) throw ValidationError("filtration is not face-closed", s.vertices);
      if (it->second > s.birth)
        throw ValidationError("face born after its coface", s.vertices);
    }
  }
  std::sort(simplices.begin(), simplices.end(), filtration_order);
  f.simplices_ = std::move(simplices);
  return f;
}

int Filtration::dimension() const noexcept {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, s.dim());
  return d;
}

SimplicialComplex Filtration::sublevel(double t) const {
  std::vector<std::vector<Simplex>> layers;
  for (const auto& s : simplices_) {
    if (s.birth > t) break;
    const auto d = static_cast<std::size_t>(s.dim());
    if (layers.size() <= d) layers.resize(d + 1);
    layers[d].push_back(s.vertices);
  }
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return SimplicialComplex::from_sorted_layers(vertex_count_, std::move(layers));
}

double birth_value(const FiniteMetricSpace& space, std::span<const Index> simplex,
                   const ScaleSequence& profile) {
  const std::size_t k = simplex.size();
  std::vector<double> table(k * k, 0.0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      table[a * k + b] = table[b * k + a] = space(simplex[a], simplex[b]);
  return birth_from_table(table, k, profile);
}

Filtration build_filtration(const FiniteMetricSpace& space, const ScaleSequence& profile,
                            int dim_cap, double max_birth) {
  if (profile.first() != 1.0) throw PreconditionError("filtration profile must start at 1");
  if (dim_cap < 0) throw PreconditionError("dimension cap must be >= 0");
  if (static_cast<std::size_t>(dim_cap) + 1 > defaults::kMaxSimplexSize)
    throw PreconditionError("dimension cap exceeds the simplex size cap");
  const std::size_t n = space.size();
  // Births are at least the diameter, so candidates are cliques of the
  // graph with edges d <= max_birth; a coface is never born earlier.
  std::vector<std::vector<Index>> up(n);
  for (Index v = 0; v < n; ++v)
    for (Index u = v + 1; u < n; ++u)
      if (space(v, u) <= max_birth) up[v].push_back(u);

  std::vector<FilteredSimplex> out;
  std::vector<double> table;
  Simplex s;
  auto extend = [&](auto&& self, const std::vector<Index>& candidates) -> void {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      s.push_back(candidates[c]);
      const std::size_t k = s.size();
      table.assign(k * k, 0.0);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          table[a * k + b] = table[b * k + a] = space(s[a], s[b]);
      const double birth = birth_from_table(table, k, profile);
      if (birth <= max_birth) {
        out.push_back({s, birth});
        if (static_cast<int>(k) <= dim_cap) {
          std::vector<Index> next;
          std::set_intersection(candidates.begin() + static_cast<long>(c) + 1, candidates.end(),
                                up[candidates[c]].begin(), up[candidates[c]].end(),
                                std::back_inserter(next));
          if (!next.empty()) self(self, next);
        }
      }
      s.pop_back();
    }
  };
  for (Index v = 0; v < n; ++v) {
    out.push_back({{v}, 0.0});
    if (dim_cap >= 1) {
      s = {v};
      extend(extend, up[v]);
    }
  }
  std::sort(out.begin(), out.end(), filtration_order);
  Filtration f = Filtration::from_simplices(n, std::move(out));
  f.set_profile(profile);
  return f;
}

}  // namespace srips
