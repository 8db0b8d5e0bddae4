#include "srips/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace srips {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

// Integer lattice points with |k|^2 < bound2 in Z^dim, lexicographic.
std::vector<std::vector<long>> lattice_ball(int dim, long bound2) {
  const long reach = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(bound2)))) + 1;
  std::vector<std::vector<long>> out;
  std::vector<long> k(dim, -reach);
  while (true) {
    long norm2 = 0;
    for (long v : k) norm2 += v * v;
    if (norm2 < bound2) out.push_back(k);
    int axis = dim - 1;
    while (axis >= 0 && k[axis] == reach) {
      k[axis] = -reach;
      --axis;
    }
    if (axis < 0) break;
    ++k[axis];
  }
  return out;
}

// Largest shell bound s (a squared lattice norm) with #{|k|^2 < s} <= count.
long shell_bound_for_count(int dim, std::size_t count) {
  const long reach =
      static_cast<long>(std::ceil(std::pow(static_cast<double>(count), 1.0 / dim))) + 2;
  std::map<long, std::size_t> shells;
  std::vector<long> k(dim, -reach);
  while (true) {
    long norm2 = 0;
    for (long v : k) norm2 += v * v;
    ++shells[norm2];
    int axis = dim - 1;
    while (axis >= 0 && k[axis] == reach) {
      k[axis] = -reach;
      --axis;
    }
    if (axis < 0) break;
    ++k[axis];
  }
  std::size_t inside = 0;
  for (const auto& [norm2, m] : shells) {
    if (norm2 > reach * reach) break;
    if (inside + m > count) return norm2;
    inside += m;
  }
  return reach * reach;
}

std::vector<double> lattice_disk(const DiskShape& disk, double spacing, long bound2) {
  std::vector<double> coords;
  for (const auto& k : lattice_ball(disk.dim, bound2)) {
    bool inside = true;
    std::vector<double> p(k.size());
    double norm2 = 0.0;
    for (std::size_t a = 0; a < k.size(); ++a) {
      p[a] = static_cast<double>(k[a]) * spacing;
      norm2 += p[a] * p[a];
    }
    if (!(std::sqrt(norm2) < disk.radius)) inside = false;
    if (inside) coords.insert(coords.end(), p.begin(), p.end());
  }
  return coords;
}

FiniteMetricSpace sample_interval(const IntervalShape& s, const SampleSpec& spec) {
  std::vector<double> x;
  std::mt19937_64 rng(spec.seed);
  switch (spec.mode) {
    case SampleMode::grid:
    case SampleMode::jittered_grid: {
      if (spec.spacing > 0.0) {
        for (std::size_t i = 0; static_cast<double>(i) * spec.spacing <= s.length; ++i)
          x.push_back(static_cast<double>(i) * spec.spacing);
      } else if (spec.count == 1) {
        x.push_back(s.length / 2.0);
      } else {
        for (std::size_t i = 0; i < spec.count; ++i)
          x.push_back(s.length * static_cast<double>(i) / static_cast<double>(spec.count - 1));
      }
      if (spec.mode == SampleMode::jittered_grid) {
        std::uniform_real_distribution<double> noise(-spec.jitter, spec.jitter);
        for (double& v : x) v = std::clamp(v + noise(rng), 0.0, s.length);
      }
      break;
    }
    case SampleMode::uniform: {
      std::uniform_real_distribution<double> u(0.0, s.length);
      for (std::size_t i = 0; i < spec.count; ++i) x.push_back(u(rng));
      std::sort(x.begin(), x.end());
      break;
    }
  }
  return FiniteMetricSpace::euclidean(std::move(x), 1);
}

FiniteMetricSpace sample_disk(const DiskShape& s, const SampleSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<double> coords;
  if (spec.mode == SampleMode::uniform) {
    std::uniform_real_distribution<double> u(-s.radius, s.radius);
    std::vector<double> p(s.dim);
    while (coords.size() < spec.count * static_cast<std::size_t>(s.dim)) {
      double norm2 = 0.0;
      for (double& v : p) {
        v = u(rng);
        norm2 += v * v;
      }
      if (std::sqrt(norm2) < s.radius) coords.insert(coords.end(), p.begin(), p.end());
    }
    return FiniteMetricSpace::euclidean(std::move(coords), s.dim);
  }
  if (spec.spacing > 0.0) {
    const double t = s.radius / spec.spacing;
    const long bound2 = static_cast<long>(std::ceil(t * t)) + 1;
    coords = lattice_disk(s, spec.spacing, bound2);
  } else {
    const long bound2 = shell_bound_for_count(s.dim, spec.count);
    const double spacing = s.radius / std::sqrt(static_cast<double>(bound2));
    // Membership is decided on integer norms so the count bound is exact.
    for (const auto& k : lattice_ball(s.dim, bound2))
      for (long v : k) coords.push_back(static_cast<double>(v) * spacing);
  }
  if (spec.mode == SampleMode::jittered_grid) {
    std::uniform_real_distribution<double> noise(-spec.jitter, spec.jitter);
    const std::size_t n = coords.size() / s.dim;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> moved(s.dim);
      for (int attempt = 0; attempt < 64; ++attempt) {
        double norm2 = 0.0;
        for (int a = 0; a < s.dim; ++a) {
          moved[a] = coords[i * s.dim + a] + noise(rng);
          norm2 += moved[a] * moved[a];
        }
        if (std::sqrt(norm2) < s.radius) {
          std::copy(moved.begin(), moved.end(), &coords[i * s.dim]);
          break;
        }
      }
    }
  }
  return FiniteMetricSpace::euclidean(std::move(coords), s.dim);
}

FiniteMetricSpace sample_circle(const CircleShape& s, const SampleSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<double> angles(spec.count);
  switch (spec.mode) {
    case SampleMode::grid:
      for (std::size_t k = 0; k < spec.count; ++k)
        angles[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(spec.count);
      break;
    case SampleMode::uniform: {
      std::uniform_real_distribution<double> u(0.0, kTwoPi);
      for (double& a : angles) a = u(rng);
      break;
    }
    case SampleMode::jittered_grid: {
      std::uniform_real_distribution<double> noise(-spec.jitter, spec.jitter);
      for (std::size_t k = 0; k < spec.count; ++k)
        angles[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(spec.count) +
                    noise(rng) / s.radius;
      break;
    }
  }
  if (s.geodesic) return FiniteMetricSpace::circle_geodesic(std::move(angles), s.radius);
  std::vector<double> coords;
  coords.reserve(2 * angles.size());
  for (double a : angles) {
    coords.push_back(s.radius * std::cos(a));
    coords.push_back(s.radius * std::sin(a));
  }
  return FiniteMetricSpace::euclidean(std::move(coords), 2)
      .with_star_radius(std::numbers::pi * s.radius / 2.0);
}

FiniteMetricSpace sample_torus(const TorusShape& s, const SampleSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const std::size_t dim = s.sides.size();
  std::vector<double> coords;
  if (spec.mode == SampleMode::uniform) {
    for (std::size_t i = 0; i < spec.count; ++i)
      for (std::size_t a = 0; a < dim; ++a)
        coords.push_back(std::uniform_real_distribution<double>(0.0, s.sides[a])(rng));
    return FiniteMetricSpace::flat_torus(std::move(coords), s.sides);
  }
  double volume = 1.0;
  for (double side : s.sides) volume *= side;
  const double per_length = std::pow(static_cast<double>(spec.count) / volume, 1.0 / dim);
  std::vector<std::size_t> m(dim);
  for (std::size_t a = 0; a < dim; ++a)
    m[a] = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(s.sides[a] * per_length)));
  std::vector<std::size_t> k(dim, 0);
  std::uniform_real_distribution<double> noise(-spec.jitter, spec.jitter);
  while (true) {
    for (std::size_t a = 0; a < dim; ++a) {
      double v = s.sides[a] * static_cast<double>(k[a]) / static_cast<double>(m[a]);
      if (spec.mode == SampleMode::jittered_grid) v += noise(rng);
      coords.push_back(v);
    }
    std::size_t axis = dim;
    while (axis > 0 && k[axis - 1] + 1 == m[axis - 1]) {
      k[axis - 1] = 0;
      --axis;
    }
    if (axis == 0) break;
    ++k[axis - 1];
  }
  return FiniteMetricSpace::flat_torus(std::move(coords), s.sides);
}

std::map<std::string, std::string> parse_keys(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("sample spec entry '" + std::string(item) + "' is not key=value");
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ParseError("sample spec key '" + key + "' has non-numeric value '" + v + "'");
  }
}

}  // namespace

void validate(const SampleSpec& spec) {
  if (spec.count < 1) throw PreconditionError("sample count must be >= 1");
  if (spec.jitter < 0.0 || !std::isfinite(spec.jitter))
    throw PreconditionError("jitter must be finite and >= 0");
  if (spec.spacing < 0.0 || !std::isfinite(spec.spacing))
    throw PreconditionError("spacing must be finite and >= 0");
  std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, IntervalShape>) {
          if (!positive(s.length)) throw PreconditionError("interval length must be positive");
        } else if constexpr (std::is_same_v<S, DiskShape>) {
          if (!positive(s.radius)) throw PreconditionError("disk radius must be positive");
          if (s.dim < 1 || s.dim > 3) throw PreconditionError("disk dimension must be 1, 2 or 3");
        } else if constexpr (std::is_same_v<S, CircleShape>) {
          if (!positive(s.radius)) throw PreconditionError("circle radius must be positive");
        } else {
          if (s.sides.empty()) throw PreconditionError("torus needs side lengths");
          for (double side : s.sides)
            if (!positive(side)) throw PreconditionError("torus sides must be positive");
        }
      },
      spec.shape);
}

FiniteMetricSpace sample(const SampleSpec& spec) {
  validate(spec);
  return std::visit(
      [&](const auto& s) -> FiniteMetricSpace {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, IntervalShape>)
          return sample_interval(s, spec);
        else if constexpr (std::is_same_v<S, DiskShape>)
          return sample_disk(s, spec);
        else if constexpr (std::is_same_v<S, CircleShape>)
          return sample_circle(s, spec);
        else
          return sample_torus(s, spec);
      },
      spec.shape);
}

SampleSpec parse_sample_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string shape(text.substr(0, colon));
  auto keys = parse_keys(colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1));
  auto take = [&](std::initializer_list<const char*> names, double fallback) {
    for (const char* name : names) {
      auto it = keys.find(name);
      if (it != keys.end()) {
        const double v = to_double(name, it->second);
        keys.erase(it);
        return v;
      }
    }
    return fallback;
  };

  SampleSpec spec;
  if (shape == "interval") {
    spec.shape = IntervalShape{take({"length", "l"}, 1.0)};
  } else if (shape == "disk") {
    DiskShape d;
    d.radius = take({"r", "radius"}, 1.0);
    d.dim = static_cast<int>(take({"dim"}, 2.0));
    spec.shape = d;
  } else if (shape == "circle") {
    CircleShape c;
    c.radius = take({"r", "radius"}, 1.0);
    c.geodesic = take({"geodesic"}, 1.0) != 0.0;
    spec.shape = c;
  } else if (shape == "torus") {
    TorusShape t;
    t.sides = {take({"a"}, 1.0), take({"b"}, 1.0)};
    if (keys.count("c")) t.sides.push_back(take({"c"}, 1.0));
    spec.shape = t;
  } else {
    throw ParseError("unknown sample shape '" + shape + "'");
  }
  spec.count = static_cast<std::size_t>(take({"n", "count"}, 1.0));
  spec.seed = static_cast<std::uint64_t>(take({"seed"}, 0.0));
  spec.jitter = take({"jitter"}, 0.0);
  spec.spacing = take({"spacing"}, 0.0);
  if (auto it = keys.find("mode"); it != keys.end()) {
    if (it->second == "grid")
      spec.mode = SampleMode::grid;
    else if (it->second == "uniform")
      spec.mode = SampleMode::uniform;
    else if (it->second == "jitter" || it->second == "jittered-grid")
      spec.mode = SampleMode::jittered_grid;
    else
      throw ParseError("unknown sample mode '" + it->second + "'");
    keys.erase(it);
  }
  if (!keys.empty()) throw ParseError("unknown sample spec key '" + keys.begin()->first + "'");
  validate(spec);
  return spec;
}

std::string to_string(const SampleSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, IntervalShape>)
          os << "interval:length=" << s.length;
        else if constexpr (std::is_same_v<S, DiskShape>)
          os << "disk:r=" << s.radius << ",dim=" << s.dim;
        else if constexpr (std::is_same_v<S, CircleShape>)
          os << "circle:r=" << s.radius << ",geodesic=" << (s.geodesic ? 1 : 0);
        else {
          const char* names[] = {"a", "b", "c"};
          os << "torus:";
          for (std::size_t a = 0; a < s.sides.size() && a < 3; ++a)
            os << (a ? "," : "") << names[a] << "=" << s.sides[a];
        }
      },
      spec.shape);
  os << ",n=" << spec.count;
  switch (spec.mode) {
    case SampleMode::grid: os << ",mode=grid"; break;
    case SampleMode::uniform: os << ",mode=uniform,seed=" << spec.seed; break;
    case SampleMode::jittered_grid:
      os << ",mode=jitter,seed=" << spec.seed << ",jitter=" << spec.jitter;
      break;
  }
  if (spec.spacing > 0.0) os << ",spacing=" << spec.spacing;
  return os.str();
}

FiniteMetricSpace dense_disk_grid(double radius, double delta, int dim) {
  if (!positive(radius) || !positive(delta)) throw PreconditionError("radius and delta must be positive");
  if (dim < 1 || dim > 3) throw PreconditionError("disk dimension must be 1, 2 or 3");
  constexpr double kShrink = 0.999;
  DiskShape disk{radius, dim};
  if (dim != 2) {
    // Rounding every coordinate toward zero lands inside the disk at distance
    // at most h * sqrt(dim).
    const double h = kShrink * delta / std::sqrt(static_cast<double>(dim));
    const double t = radius / h;
    return FiniteMetricSpace::euclidean(
        lattice_disk(disk, h, static_cast<long>(std::ceil(t * t)) + 1), dim);
  }
  // Lattice covering radius h / sqrt(2) < delta handles points whose nearest
  // lattice point is inside; the rest lie in the annulus (radius - delta,
  // radius), which the ring at radius - delta/2 covers once its angular step
  // is below sqrt(3) * delta / radius.
  const double h = kShrink * std::numbers::sqrt2 * delta;
  const double t = radius / h;
  std::vector<double> coords = lattice_disk(disk, h, static_cast<long>(std::ceil(t * t)) + 1);
  const double ring_radius = radius - delta / 2.0;
  if (ring_radius > 0.0) {
    const auto m = static_cast<std::size_t>(
        std::ceil(kTwoPi * radius / (std::sqrt(3.0) * delta * kShrink)) + 1);
    for (std::size_t k = 0; k < m; ++k) {
      const double a = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
      coords.push_back(ring_radius * std::cos(a));
      coords.push_back(ring_radius * std::sin(a));
    }
  }
  return FiniteMetricSpace::euclidean(std::move(coords), 2);
}

Index nearest_to_origin(const FiniteMetricSpace& space) {
  if (space.empty() || space.kind() != MetricKind::euclidean)
    throw PreconditionError("nearest_to_origin needs a non-empty euclidean space");
  const std::vector<double> origin(space.coordinate_dim(), 0.0);
  Index best = 0;
  double best_d = space.distance_to_point(origin, 0);
  for (Index i = 1; i < space.size(); ++i) {
    const double d = space.distance_to_point(origin, i);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::vector<std::size_t> model_betti(const Shape& shape, int dim_cap) {
  std::vector<std::size_t> b(static_cast<std::size_t>(std::max(dim_cap, 0)) + 1, 0);
  b[0] = 1;
  if (std::holds_alternative<CircleShape>(shape)) {
    if (b.size() > 1) b[1] = 1;
  } else if (const auto* t = std::get_if<TorusShape>(&shape)) {
    const std::size_t d = t->sides.size();
    for (std::size_t k = 1; k < b.size() && k <= d; ++k) {
      std::size_t c = 1;
      for (std::size_t j = 0; j < k; ++j) c = c * (d - j) / (j + 1);
      b[k] = c;
    }
  }
  return b;
}

}  // namespace srips
