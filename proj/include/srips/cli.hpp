#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srips/complex.hpp"
#include "srips/crushing.hpp"
#include "srips/defaults.hpp"
#include "srips/metric.hpp"
#include "srips/report_io.hpp"
#include "srips/scales.hpp"

namespace srips::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2 };

// Default output directory when --out is not given.
inline constexpr const char* kOutDirEnv = "SRIPS_OUT_DIR";

struct RunConfig {
  // Exactly one input source.
  std::string sample;                 // sampler spec, e.g. circle:r=1,n=60
  std::string matrix;                 // lower-triangular text or square JSON
  std::string cloud;                  // CSV coordinates
  std::string metric = "euclidean";   // for cloud input
  std::vector<double> metric_params;  // circle radius or torus sides

  std::string scales;
  std::string profile;
  std::optional<double> rips;  // Rips radius, same as constant scales
  int dim_cap = defaults::kDimCap;
  std::size_t size_cap = defaults::kSizeCap;
  std::uint64_t seed = 0;
  double divisor = defaults::kDivisor;
  double triangle_tolerance = defaults::kTriangleTolerance;
  std::string out;  // output directory; empty = $SRIPS_OUT_DIR, then none
  std::string format = "json";
};

FiniteMetricSpace load_input(const RunConfig& config);
// --scales, else --rips as a constant sequence. Throws PreconditionError if neither.
ScaleSequence resolve_scales(const RunConfig& config);

struct CounterexampleConfig {
  std::size_t n = 3;
  double base = 1.0;                    // r_1 of the default sequence
  std::optional<ScaleSequence> scales;  // overrides the default r_i = 0.9 r_{i-1} / (i + 1)
  std::optional<double> spacing;        // default (r_n + r_{n-1} / n) / 2
  int dim_cap = -1;                     // -1 = n
};

struct CounterexampleReport {
  FiniteMetricSpace space;
  ScaleSequence scales = ScaleSequence::constant(1.0);
  double spacing = 0.0;
  std::vector<std::string> constraints;  // "r_{i-1} > (i+1) r_i" instances checked
  SimplicialComplex complex;
  std::vector<std::size_t> betti;
  std::size_t top_simplices = 0;  // n-simplices
  CrushResult crush;
};

// n+1 evenly spaced points of the line whose n-point subsets are simplices
// and whose full set is not. Throws ValidationError when r_{i-1} > (i+1) r_i
// fails for some i in 2..n, or when the spacing does not lie in
// (r_n, r_{n-1} / n).
CounterexampleReport run_counterexample(const CounterexampleConfig& config);
Json counterexample_json(const CounterexampleReport& report);

// Entry point of the `srips` tool. Writes the primary output to `out`,
// diagnostics to `err`, and returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srips::cli
