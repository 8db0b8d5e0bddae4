#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "srips/metric.hpp"

namespace srips {

// Lower-triangular text: line i holds d(i,0), ..., d(i,i-1), comma separated;
// line 0 is empty. Lines starting with '#' are ignored.
FiniteMetricSpace read_lower_triangular(std::istream& in,
                                        double triangle_tolerance = defaults::kTriangleTolerance);
void write_lower_triangular(std::ostream& out, const FiniteMetricSpace& space);

// Square JSON array [[...], ...].
FiniteMetricSpace read_matrix_json(std::istream& in,
                                   double triangle_tolerance = defaults::kTriangleTolerance);
void write_matrix_json(std::ostream& out, const FiniteMetricSpace& space);

// Point cloud CSV, one row of coordinates per point. metric is one of
// "euclidean", "circle-geodesic" (one column of angles; `parameter` is the
// radius) or "flat-torus" (`sides` gives the periods).
FiniteMetricSpace read_cloud_csv(std::istream& in, const std::string& metric,
                                 const std::vector<double>& parameters = {});
void write_cloud_csv(std::ostream& out, const FiniteMetricSpace& space);

// Dispatches on extension: .json -> square JSON, anything else -> lower triangular.
FiniteMetricSpace load_matrix_file(const std::filesystem::path& path,
                                   double triangle_tolerance = defaults::kTriangleTolerance);
FiniteMetricSpace load_cloud_file(const std::filesystem::path& path, const std::string& metric,
                                  const std::vector<double>& parameters = {});

}  // namespace srips
