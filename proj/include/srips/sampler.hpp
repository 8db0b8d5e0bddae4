#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "srips/metric.hpp"

namespace srips {

struct IntervalShape {
  double length = 1.0;
};

// Open ball of the given radius in R^dim (dim 1..3), centred at the origin.
struct DiskShape {
  double radius = 1.0;
  int dim = 2;
};

// Circle of the given radius; geodesic = arc length, otherwise chordal.
struct CircleShape {
  double radius = 1.0;
  bool geodesic = true;
};

struct TorusShape {
  std::vector<double> sides{1.0, 1.0};
};

using Shape = std::variant<IntervalShape, DiskShape, CircleShape, TorusShape>;

enum class SampleMode { grid, uniform, jittered_grid };

struct SampleSpec {
  Shape shape = IntervalShape{};
  std::size_t count = 1;
  SampleMode mode = SampleMode::grid;
  std::uint64_t seed = 0;
  double jitter = 0.0;   // amplitude in length units (jittered_grid)
  double spacing = 0.0;  // explicit lattice spacing for interval/disk grids; 0 = derive from count
};

void validate(const SampleSpec& spec);

// Deterministic for a fixed spec (and seed). Distances are exact closed forms:
//  interval   - points of [0, length]; grid is evenly spaced with endpoints
//  disk       - grid is the largest origin-centred square lattice with at most
//               `count` points strictly inside the ball
//  circle     - grid angles 2*pi*k/count
//  flat torus - product grid with per-axis counts proportional to the sides
FiniteMetricSpace sample(const SampleSpec& spec);

// Parses "circle:r=1,n=60", "interval:length=10,n=11", "disk:r=1,dim=2,n=200",
// "torus:a=1,b=2,n=100". Optional keys: mode=grid|uniform|jitter, seed,
// jitter, spacing, geodesic=0|1.
SampleSpec parse_sample_spec(std::string_view text);
std::string to_string(const SampleSpec& spec);

// Square lattice plus a boundary ring that is delta-dense in the open 2-disk
// of the given radius: every point of the disk lies strictly within delta of a
// sample point. Other dimensions use a finer lattice alone.
FiniteMetricSpace dense_disk_grid(double radius, double delta, int dim = 2);

// Closest sample point to the origin (ties: lowest index). Euclidean spaces only.
Index nearest_to_origin(const FiniteMetricSpace& space);

// Betti numbers of the continuous model, used as the reference homology.
std::vector<std::size_t> model_betti(const Shape& shape, int dim_cap);

}  // namespace srips
