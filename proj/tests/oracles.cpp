#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace oracle {

Matrix random_metric(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> w(lo, hi);
  Matrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = w(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

Matrix random_planar(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = u(rng);
    y[i] = u(rng);
  }
  Matrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = std::hypot(x[i] - x[j], y[i] - y[j]);
  return d;
}

std::vector<Vertices> flag_complex(const Matrix& d, double r, int dim_cap) {
  const std::size_t n = d.size();
  std::vector<Vertices> out;
  Vertices cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t v = from; v < n; ++v) {
      bool ok = true;
      for (auto u : cur) ok = ok && d[u][v] < r;
      if (!ok) continue;
      cur.push_back(static_cast<std::uint32_t>(v));
      out.push_back(cur);
      if (static_cast<int>(cur.size()) <= dim_cap) self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Vertices& a, const Vertices& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

// Calls visit(labels, blocks) for every restricted growth string of length k.
template <class Visit>
void for_each_partition(std::size_t k, Visit&& visit) {
  std::vector<int> labels(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, int blocks) -> void {
    if (pos == k) {
      visit(labels, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      labels[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  if (k == 0) return;
  labels[0] = 0;
  rec(rec, 1, 1);
}

std::vector<double> block_diameters(const Matrix& d, const Vertices& sigma, const std::vector<int>& labels,
                                    int blocks) {
  std::vector<double> diam(blocks, 0.0);
  for (std::size_t a = 0; a < sigma.size(); ++a)
    for (std::size_t b = a + 1; b < sigma.size(); ++b)
      if (labels[a] == labels[b]) diam[labels[a]] = std::max(diam[labels[a]], d[sigma[a]][sigma[b]]);
  return diam;
}

}  // namespace

bool partition_member(const Matrix& d, const Vertices& sigma, const std::vector<double>& scales) {
  const std::size_t k = sigma.size();
  std::vector<char> satisfied(k, 0);  // satisfied[i] for i = 1..k-1
  for_each_partition(k, [&](const std::vector<int>& labels, int blocks) {
    const auto diam = block_diameters(d, sigma, labels, blocks);
    const double widest = *std::max_element(diam.begin(), diam.end());
    for (std::size_t i = static_cast<std::size_t>(blocks); i < k; ++i) {
      const double r = scales[std::min(i, scales.size()) - 1];
      if (widest < r) satisfied[i] = 1;
    }
  });
  for (std::size_t i = 1; i < k; ++i)
    if (!satisfied[i]) return false;
  return true;
}

double partition_width(const Matrix& d, const Vertices& sigma, std::size_t i) {
  double best = std::numeric_limits<double>::infinity();
  for_each_partition(sigma.size(), [&](const std::vector<int>& labels, int blocks) {
    if (static_cast<std::size_t>(blocks) > i) return;
    const auto diam = block_diameters(d, sigma, labels, blocks);
    best = std::min(best, *std::max_element(diam.begin(), diam.end()));
  });
  return best;
}

std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = c; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> dense_betti(const std::vector<Vertices>& simplices, int dim_cap) {
  std::vector<std::vector<Vertices>> by_dim(dim_cap + 2);
  for (const auto& s : simplices) {
    const int dim = static_cast<int>(s.size()) - 1;
    if (dim <= dim_cap + 1) by_dim[dim].push_back(s);
  }
  // rank of the boundary from dimension p to p - 1
  std::vector<std::size_t> rank(dim_cap + 3, 0);
  for (int p = 1; p <= dim_cap + 1; ++p) {
    const auto& rows_src = by_dim[p];
    const auto& faces = by_dim[p - 1];
    if (rows_src.empty() || faces.empty()) continue;
    std::map<Vertices, std::size_t> index;
    for (std::size_t f = 0; f < faces.size(); ++f) index[faces[f]] = f;
    std::vector<std::vector<std::uint8_t>> m(rows_src.size(), std::vector<std::uint8_t>(faces.size(), 0));
    for (std::size_t s = 0; s < rows_src.size(); ++s)
      for (std::size_t drop = 0; drop < rows_src[s].size(); ++drop) {
        Vertices face = rows_src[s];
        face.erase(face.begin() + static_cast<long>(drop));
        m[s][index.at(face)] = 1;
      }
    rank[p] = dense_rank(std::move(m));
  }
  std::vector<std::size_t> betti(dim_cap + 1, 0);
  for (int p = 0; p <= dim_cap; ++p) betti[p] = by_dim[p].size() - rank[p] - rank[p + 1];
  return betti;
}

std::vector<Bar> dense_persistence(const std::vector<Vertices>& simplices, const std::vector<double>& births) {
  const std::size_t n = simplices.size();
  std::map<Vertices, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[simplices[k]] = k;
  std::vector<std::vector<std::uint8_t>> col(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    if (simplices[k].size() < 2) continue;
    for (std::size_t drop = 0; drop < simplices[k].size(); ++drop) {
      Vertices face = simplices[k];
      face.erase(face.begin() + static_cast<long>(drop));
      col[k][index.at(face)] = 1;
    }
  }
  auto low = [&](std::size_t k) -> long {
    for (long r = static_cast<long>(n) - 1; r >= 0; --r)
      if (col[k][r]) return r;
    return -1;
  };
  std::vector<long> owner(n, -1);  // owner[row] = column whose low is row
  std::vector<char> paired(n, 0);
  std::vector<Bar> bars;
  for (std::size_t k = 0; k < n; ++k) {
    long l = low(k);
    while (l >= 0 && owner[l] >= 0) {
      for (std::size_t r = 0; r < n; ++r) col[k][r] ^= col[owner[l]][r];
      l = low(k);
    }
    if (l >= 0) {
      owner[l] = static_cast<long>(k);
      paired[l] = paired[k] = 1;
      if (births[l] < births[k])
        bars.push_back({static_cast<int>(simplices[l].size()) - 1, births[l], births[k]});
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!paired[k]) bars.push_back({static_cast<int>(simplices[k].size()) - 1, births[k]});
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
  return bars;
}

void rips_filtration(const Matrix& d, int dim_cap, std::vector<Vertices>& simplices, std::vector<double>& births) {
  const auto all = flag_complex(d, std::numeric_limits<double>::infinity(), dim_cap);
  std::vector<std::pair<double, Vertices>> keyed;
  for (const auto& s : all) {
    double b = 0.0;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t c = a + 1; c < s.size(); ++c) b = std::max(b, d[s[a]][s[c]]);
    keyed.emplace_back(b, s);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x.second < y.second;
  });
  simplices.clear();
  births.clear();
  for (auto& [b, s] : keyed) {
    births.push_back(b);
    simplices.push_back(std::move(s));
  }
}

double two_disc_inscribed_radius(double r_inf, double r_prime) {
  // y = (r', 0); p = r' (cos t, sin t) with |p - y| = r_inf, t in (0, pi).
  auto gap = [&](double t) { return std::hypot(r_prime * std::cos(t) - r_prime, r_prime * std::sin(t)) - r_inf; };
  double lo = 0.0;
  double hi = std::acos(-1.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  const double px = r_prime * std::cos(t);
  const double py = r_prime * std::sin(t);
  // Centre c = (s, 0), s in [0, r']; by symmetry the lens constraint is r_inf - |c - p|.
  auto radius = [&](double s) { return r_inf - std::hypot(s - px, py); };
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0;
  double b = r_prime;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = radius(x1);
  double f2 = radius(x2);
  for (int it = 0; it < 300; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = radius(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = radius(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace oracle
