#pragma once

#include <cstddef>

// Library-wide defaults. Every command-line flag falls back to these.
namespace srips::defaults {

// Absolute slack allowed in triangle-inequality validation.
inline constexpr double kTriangleTolerance = 1e-9;

// Divisor K in delta1' = delta1(r_inf, alpha) / K. Values >= 8 make every
// strict inequality of the glued-space schedule hold with slack.
inline constexpr double kDivisor = 8.0;

// Largest number of cover elements intersected at once.
inline constexpr std::size_t kSizeCap = 6;

// Highest simplex dimension built by default.
inline constexpr int kDimCap = 3;

// Largest vertex set handed to the partition solver.
inline constexpr std::size_t kMaxSimplexSize = 16;

// Tolerance of the numerical structural checks on disk grids.
inline constexpr double kStructuralTolerance = 1e-9;

}  // namespace srips::defaults
