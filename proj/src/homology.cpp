#include "srips/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace srips {

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

void add_into(std::vector<Index>& target, const std::vector<Index>& source,
              std::vector<Index>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

// Reduces columns in place; returns low(j) per column (kNone if zero).
std::vector<Index> reduce(std::vector<std::vector<Index>>& columns, std::size_t rows) {
  std::vector<Index> owner(rows, kNone);
  std::vector<Index> low(columns.size(), kNone);
  std::vector<Index> scratch;
  for (Index j = 0; j < columns.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty() && owner[col.back()] != kNone) add_into(col, columns[owner[col.back()]], scratch);
    if (!col.empty()) {
      owner[col.back()] = j;
      low[j] = col.back();
    }
  }
  return low;
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int dim) {
  BoundaryMatrix m;
  m.dim = dim;
  m.rows = dim > 0 ? complex.count(dim - 1) : 0;
  if (dim <= 0) {
    m.columns.assign(complex.count(dim), {});
    return m;
  }
  for (const auto& s : complex.simplices(dim)) {
    std::vector<Index> col;
    for (const auto& f : facets(s)) {
      const long pos = complex.index_of(f);
      if (pos < 0) throw ValidationError("complex is not face-closed", s);
      col.push_back(static_cast<Index>(pos));
    }
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

std::size_t gf2_rank(std::vector<std::vector<Index>> columns) {
  Index rows = 0;
  for (const auto& c : columns)
    if (!c.empty()) rows = std::max(rows, static_cast<Index>(c.back() + 1));
  const auto low = reduce(columns, rows);
  return static_cast<std::size_t>(std::count_if(low.begin(), low.end(), [](Index l) { return l != kNone; }));
}

std::vector<std::size_t> betti(const SimplicialComplex& complex, int dim_cap) {
  std::vector<std::size_t> rank(static_cast<std::size_t>(dim_cap) + 2, 0);
  for (int d = 1; d <= dim_cap + 1; ++d) rank[d] = gf2_rank(boundary_matrix(complex, d).columns);
  std::vector<std::size_t> b(static_cast<std::size_t>(dim_cap) + 1, 0);
  for (int d = 0; d <= dim_cap; ++d) b[d] = complex.count(d) - rank[d] - rank[d + 1];
  return b;
}

long euler_characteristic(const SimplicialComplex& complex) {
  long chi = 0;
  for (int d = 0; d <= complex.dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(complex.count(d));
  return chi;
}

bool boundary_squared_vanishes(const SimplicialComplex& complex) {
  for (int d = 2; d <= complex.dimension(); ++d) {
    const auto top = boundary_matrix(complex, d);
    const auto below = boundary_matrix(complex, d - 1);
    for (const auto& col : top.columns) {
      std::map<Index, int> parity;
      for (Index f : col)
        for (Index g : below.columns[f]) parity[g] ^= 1;
      for (const auto& [row, p] : parity)
        if (p) return false;
    }
  }
  return true;
}

std::vector<PersistenceInterval> Barcode::in_dim(int dim) const {
  std::vector<PersistenceInterval> out;
  for (const auto& i : intervals)
    if (i.dim == dim) out.push_back(i);
  return out;
}

std::size_t Barcode::rank_at(int dim, double t) const {
  std::size_t n = 0;
  for (const auto& i : intervals)
    if (i.dim == dim && i.birth <= t && t < i.death) ++n;
  return n;
}

Barcode persistence(const Filtration& filtration, int dim_cap, Reduction mode) {
  const auto& simplices = filtration.simplices();
  const std::size_t n = simplices.size();
  std::map<Simplex, Index> position;
  for (Index k = 0; k < n; ++k) position.emplace(simplices[k].vertices, k);

  std::vector<std::vector<Index>> columns(n);
  for (Index k = 0; k < n; ++k) {
    if (simplices[k].dim() > dim_cap + 1) continue;
    for (const auto& f : facets(simplices[k].vertices)) columns[k].push_back(position.at(f));
    std::sort(columns[k].begin(), columns[k].end());
  }

  std::vector<Index> low(n, kNone);
  if (mode == Reduction::plain) {
    low = reduce(columns, n);
  } else {
    // Twist: reduce higher dimensions first; a column whose index is the
    // pivot of an already reduced column is a boundary's partner and reduces
    // to zero.
    std::vector<Index> owner(n, kNone);
    std::vector<char> cleared(n, 0);
    std::vector<Index> scratch;
    for (int d = dim_cap + 1; d >= 1; --d) {
      for (Index j = 0; j < n; ++j) {
        if (simplices[j].dim() != d) continue;
        auto& col = columns[j];
        if (cleared[j]) {
          col.clear();
          continue;
        }
        while (!col.empty() && owner[col.back()] != kNone)
          add_into(col, columns[owner[col.back()]], scratch);
        if (!col.empty()) {
          owner[col.back()] = j;
          low[j] = col.back();
          cleared[col.back()] = 1;
        }
      }
    }
  }

  std::vector<char> killed(n, 0);
  Barcode code;
  for (Index j = 0; j < n; ++j) {
    if (low[j] == kNone) continue;
    killed[low[j]] = 1;
    const auto& born = simplices[low[j]];
    if (born.dim() > dim_cap) continue;
    if (born.birth < simplices[j].birth)
      code.intervals.push_back({born.dim(), born.birth, simplices[j].birth});
  }
  for (Index j = 0; j < n; ++j) {
    if (low[j] != kNone || killed[j]) continue;
    if (simplices[j].dim() > dim_cap) continue;
    code.intervals.push_back({simplices[j].dim(), simplices[j].birth});
  }
  std::sort(code.intervals.begin(), code.intervals.end(),
            [](const PersistenceInterval& a, const PersistenceInterval& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              if (a.birth != b.birth) return a.birth < b.birth;
              return a.death < b.death;
            });
  return code;
}

std::size_t induced_rank(const SimplicialComplex& sub, const SimplicialComplex& super, int dim) {
  if (!sub.subcomplex_of(super)) throw PreconditionError("induced_rank needs sub to be a subcomplex of super");
  std::vector<FilteredSimplex> simplices;
  for (int d = 0; d <= std::min(super.dimension(), dim + 1); ++d)
    for (const auto& s : super.simplices(d)) simplices.push_back({s, sub.contains(s) ? 0.0 : 1.0});
  const auto f = Filtration::from_simplices(super.vertex_count(), std::move(simplices));
  const auto code = persistence(f, dim);
  std::size_t rank = 0;
  for (const auto& i : code.intervals)
    if (i.dim == dim && i.birth == 0.0 && i.infinite()) ++rank;
  return rank;
}

}  // namespace srips
