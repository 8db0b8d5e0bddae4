#include "srips/metric_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace srips {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token, std::size_t line) {
  const std::string t = trim(token);
  if (t == "inf" || t == "Inf" || t == "INF") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
    throw ParseError("line " + std::to_string(line) + ": '" + t + "' is not a number");
  return value;
}

std::vector<double> split_numbers(const std::string& line, std::size_t line_no) {
  std::vector<double> out;
  if (trim(line).empty()) return out;
  std::stringstream ss(line);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(parse_number(token, line_no));
  return out;
}

// Data lines with comments removed. Blank lines are kept because row 0 of the
// lower-triangular format is blank.
std::vector<std::string> data_lines(std::istream& in, bool* saw_blank = nullptr) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (saw_blank && trim(line).empty()) *saw_blank = true;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty() && trim(line)[0] == '#') continue;
    lines.push_back(line);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

FiniteMetricSpace read_lower_triangular(std::istream& in, double triangle_tolerance) {
  bool saw_blank = false;
  auto lines = data_lines(in, &saw_blank);
  // A single point is written as one blank line, which data_lines drops.
  if (lines.empty() && saw_blank) lines.emplace_back();
  if (lines.empty()) throw ParseError("empty distance file");
  const std::size_t n = lines.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto values = split_numbers(lines[i], i + 1);
    if (values.size() != i)
      throw ParseError("line " + std::to_string(i + 1) + ": expected " + std::to_string(i) +
                       " entries, found " + std::to_string(values.size()));
    for (std::size_t j = 0; j < i; ++j) rows[i][j] = rows[j][i] = values[j];
  }
  return FiniteMetricSpace::from_matrix(rows, triangle_tolerance);
}

void write_lower_triangular(std::ostream& out, const FiniteMetricSpace& space) {
  for (Index i = 0; i < space.size(); ++i) {
    for (Index j = 0; j < i; ++j) out << (j ? "," : "") << format_double(space(i, j));
    out << '\n';
  }
}

FiniteMetricSpace read_matrix_json(std::istream& in, double triangle_tolerance) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw ParseError("expected a non-empty JSON array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw ParseError("every row must be a JSON array");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError("matrix entries must be numbers");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return FiniteMetricSpace::from_matrix(rows, triangle_tolerance);
}

void write_matrix_json(std::ostream& out, const FiniteMetricSpace& space) {
  out << "[";
  for (Index i = 0; i < space.size(); ++i) {
    out << (i ? ",\n " : "") << "[";
    for (Index j = 0; j < space.size(); ++j) out << (j ? "," : "") << format_double(space(i, j));
    out << "]";
  }
  out << "]\n";
}

FiniteMetricSpace read_cloud_csv(std::istream& in, const std::string& metric,
                                 const std::vector<double>& parameters) {
  const auto lines = data_lines(in);
  std::vector<double> coords;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const auto values = split_numbers(lines[i], i + 1);
    if (dim == 0) dim = values.size();
    if (values.size() != dim)
      throw ParseError("line " + std::to_string(i + 1) + ": expected " + std::to_string(dim) +
                       " coordinates");
    for (double v : values)
      if (!std::isfinite(v)) throw ParseError("line " + std::to_string(i + 1) + ": non-finite coordinate");
    coords.insert(coords.end(), values.begin(), values.end());
  }
  if (coords.empty()) throw ParseError("empty point cloud");
  if (metric == "euclidean") return FiniteMetricSpace::euclidean(std::move(coords), static_cast<int>(dim));
  if (metric == "circle-geodesic") {
    if (dim != 1) throw ParseError("circle-geodesic clouds have one angle column");
    const double radius = parameters.empty() ? 1.0 : parameters.front();
    return FiniteMetricSpace::circle_geodesic(std::move(coords), radius);
  }
  if (metric == "flat-torus") {
    std::vector<double> sides = parameters;
    if (sides.empty()) sides.assign(dim, 1.0);
    if (sides.size() != dim) throw ParseError("flat-torus needs one side length per column");
    return FiniteMetricSpace::flat_torus(std::move(coords), std::move(sides));
  }
  throw ParseError("unknown metric '" + metric + "' (euclidean | circle-geodesic | flat-torus)");
}

void write_cloud_csv(std::ostream& out, const FiniteMetricSpace& space) {
  if (space.kind() == MetricKind::matrix)
    throw PreconditionError("matrix-backed spaces have no coordinates to write");
  for (Index i = 0; i < space.size(); ++i) {
    const auto p = space.point(i);
    for (std::size_t a = 0; a < p.size(); ++a) out << (a ? "," : "") << format_double(p[a]);
    out << '\n';
  }
}

FiniteMetricSpace load_matrix_file(const std::filesystem::path& path, double triangle_tolerance) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  if (path.extension() == ".json") return read_matrix_json(in, triangle_tolerance);
  return read_lower_triangular(in, triangle_tolerance);
}

FiniteMetricSpace load_cloud_file(const std::filesystem::path& path, const std::string& metric,
                                  const std::vector<double>& parameters) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_cloud_csv(in, metric, parameters);
}

}  // namespace srips
