#include "srips/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace srips {

namespace {

void sort_layers(std::vector<std::vector<Simplex>>& layers) {
  for (auto& layer : layers) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
}

}  // namespace

std::vector<Simplex> facets(std::span<const Index> simplex) {
  std::vector<Simplex> out;
  if (simplex.size() < 2) return out;
  // Dropping the last vertex first gives lexicographic order.
  for (std::size_t skip = simplex.size(); skip-- > 0;) {
    Simplex f;
    f.reserve(simplex.size() - 1);
    for (std::size_t k = 0; k < simplex.size(); ++k)
      if (k != skip) f.push_back(simplex[k]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count,
                                                    std::vector<Simplex> simplices) {
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  for (auto& s : simplices) {
    if (s.empty()) continue;
    const Simplex original = s;
    s = normalized(std::move(s));
    if (s.size() != original.size())
      throw ValidationError("simplex has repeated vertices", original);
    if (s.back() >= vertex_count) throw ValidationError("simplex vertex out of range", s);
    const std::size_t dim = s.size() - 1;
    if (c.layers_.size() <= dim) c.layers_.resize(dim + 1);
    c.layers_[dim].push_back(std::move(s));
  }
  sort_layers(c.layers_);
  for (int d = 1; d <= c.dimension(); ++d)
    for (const auto& s : c.layers_[d])
      for (const auto& f : facets(s))
        if (!c.contains(f)) throw ValidationError("complex is not face-closed", s);
  return c;
}

SimplicialComplex SimplicialComplex::closure(std::size_t vertex_count,
                                             std::span<const Simplex> simplices) {
  std::vector<std::set<Simplex>> layers;
  for (const auto& raw : simplices) {
    if (raw.empty()) continue;
    const Simplex s = normalized(raw);
    if (s.back() >= vertex_count) throw ValidationError("simplex vertex out of range", s);
    // Enumerate every non-empty subset.
    if (s.size() > 24) throw PreconditionError("closure of simplices above 24 vertices is not supported");
    const std::uint32_t full = (1u << s.size()) - 1;
    if (layers.size() < s.size()) layers.resize(s.size());
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Simplex f;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (mask & (1u << k)) f.push_back(s[k]);
      layers[f.size() - 1].insert(std::move(f));
    }
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& layer : layers) out.emplace_back(layer.begin(), layer.end());
  return from_sorted_layers(vertex_count, std::move(out));
}

SimplicialComplex SimplicialComplex::from_sorted_layers(std::size_t vertex_count,
                                                        std::vector<std::vector<Simplex>> layers) {
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  c.layers_ = std::move(layers);
  while (!c.layers_.empty() && c.layers_.back().empty()) c.layers_.pop_back();
  return c;
}

std::vector<std::size_t> SimplicialComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& layer : layers_) out.push_back(layer.size());
  return out;
}

std::size_t SimplicialComplex::size() const noexcept {
  std::size_t total = 0;
  for (const auto& layer : layers_) total += layer.size();
  return total;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> kEmpty;
  if (dim < 0 || dim >= static_cast<int>(layers_.size())) return kEmpty;
  return layers_[dim];
}

std::vector<Simplex> SimplicialComplex::all() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (const auto& layer : layers_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

long SimplicialComplex::index_of(std::span<const Index> simplex) const {
  if (simplex.empty() || simplex.size() > layers_.size()) return -1;
  const auto& layer = layers_[simplex.size() - 1];
  const auto it = std::lower_bound(layer.begin(), layer.end(), simplex,
                                   [](const Simplex& a, std::span<const Index> b) {
                                     return std::lexicographical_compare(a.begin(), a.end(),
                                                                         b.begin(), b.end());
                                   });
  if (it == layer.end() || !std::equal(it->begin(), it->end(), simplex.begin(), simplex.end()))
    return -1;
  return static_cast<long>(it - layer.begin());
}

bool SimplicialComplex::contains(std::span<const Index> simplex) const {
  return index_of(simplex) >= 0;
}

bool SimplicialComplex::subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& layer : layers_)
    for (const auto& s : layer)
      if (!other.contains(s)) return false;
  return true;
}

SimplicialComplex SimplicialComplex::skeleton(int dim) const {
  SimplicialComplex c;
  c.vertex_count_ = vertex_count_;
  for (int d = 0; d <= std::min(dim, dimension()); ++d) c.layers_.push_back(layers_[d]);
  return c;
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  SimplicialComplex c;
  c.vertex_count_ = std::min(a.vertex_count_, b.vertex_count_);
  const int top = std::min(a.dimension(), b.dimension());
  for (int d = 0; d <= top; ++d) {
    std::vector<Simplex> layer;
    std::set_intersection(a.layers_[d].begin(), a.layers_[d].end(), b.layers_[d].begin(),
                          b.layers_[d].end(), std::back_inserter(layer));
    c.layers_.push_back(std::move(layer));
  }
  while (!c.layers_.empty() && c.layers_.back().empty()) c.layers_.pop_back();
  return c;
}

SimplicialComplex SimplicialComplex::induced(std::span<const Index> vertices, bool relabel) const {
  std::vector<long> position(vertex_count_, -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) position[vertices[k]] = static_cast<long>(k);
  std::vector<std::vector<Simplex>> layers(layers_.size());
  for (std::size_t d = 0; d < layers_.size(); ++d) {
    for (const auto& s : layers_[d]) {
      bool inside = true;
      for (Index v : s) inside = inside && position[v] >= 0;
      if (!inside) continue;
      if (!relabel) {
        layers[d].push_back(s);
        continue;
      }
      Simplex t;
      for (Index v : s) t.push_back(static_cast<Index>(position[v]));
      layers[d].push_back(std::move(t));
    }
  }
  // Relabelling through a sorted vertex list preserves lexicographic order.
  return from_sorted_layers(relabel ? vertices.size() : vertex_count_, std::move(layers));
}

SimplicialComplex SimplicialComplex::relabeled(std::span<const Index> labels,
                                               std::size_t new_vertex_count) const {
  std::vector<Simplex> mapped;
  mapped.reserve(size());
  for (const auto& layer : layers_) {
    for (const auto& s : layer) {
      Simplex t;
      for (Index v : s) t.push_back(labels[v]);
      const Simplex sorted = normalized(t);
      if (sorted.size() != t.size()) throw PreconditionError("relabelling is not injective on a simplex");
      mapped.push_back(sorted);
    }
  }
  return from_simplices(new_vertex_count, std::move(mapped));
}

}  // namespace srips
