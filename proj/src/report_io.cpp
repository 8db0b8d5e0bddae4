#include "srips/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "srips/metric_io.hpp"

namespace srips {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Json simplex_json(const Simplex& s) { return Json(s); }

Json counts_json(const std::vector<std::size_t>& counts) { return Json(counts); }

double finite_extent(const Barcode& barcode) {
  double hi = 0.0;
  for (const auto& bar : barcode.intervals) {
    hi = std::max(hi, bar.birth);
    if (!bar.infinite()) hi = std::max(hi, bar.death);
  }
  return hi > 0.0 ? hi : 1.0;
}

}  // namespace

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

Json number_json(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

void write_complex_text(std::ostream& out, const SimplicialComplex& complex) {
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (const auto& s : complex.simplices(d)) {
      out << d;
      for (Index v : s) out << ' ' << v;
      out << '\n';
    }
  }
}

void write_filtration_text(std::ostream& out, const Filtration& filtration) {
  for (const auto& s : filtration.simplices()) {
    out << s.dim();
    for (Index v : s.vertices) out << ' ' << v;
    out << ' ' << format_number(s.birth) << '\n';
  }
}

SimplicialComplex read_complex_text(std::istream& in) {
  std::vector<Simplex> simplices;
  std::string line;
  std::size_t number = 0;
  std::size_t vertex_count = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    long dim = -1;
    if (!(fields >> dim) || dim < 0) throw ParseError("line " + std::to_string(number) + ": bad dimension");
    Simplex s;
    for (long k = 0; k <= dim; ++k) {
      long v = -1;
      if (!(fields >> v) || v < 0)
        throw ParseError("line " + std::to_string(number) + ": expected " + std::to_string(dim + 1) +
                         " vertices");
      s.push_back(static_cast<Index>(v));
      vertex_count = std::max(vertex_count, static_cast<std::size_t>(v) + 1);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ParseError("line " + std::to_string(number) + ": repeated vertex");
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex::from_simplices(vertex_count, std::move(simplices));
}

Json complex_json(const SimplicialComplex& complex, bool with_simplices) {
  Json j;
  j["vertex_count"] = complex.vertex_count();
  j["dimension"] = complex.dimension();
  j["counts"] = counts_json(complex.counts());
  if (with_simplices) {
    Json all = Json::array();
    for (int d = 0; d <= complex.dimension(); ++d)
      for (const auto& s : complex.simplices(d)) all.push_back(simplex_json(s));
    j["simplices"] = std::move(all);
  }
  return j;
}

Json filtration_json(const Filtration& filtration) {
  Json j;
  j["vertex_count"] = filtration.vertex_count();
  if (filtration.profile()) j["profile"] = filtration.profile()->to_string();
  Json all = Json::array();
  for (const auto& s : filtration.simplices())
    all.push_back(Json{{"simplex", simplex_json(s.vertices)}, {"birth", number_json(s.birth)}});
  j["simplices"] = std::move(all);
  return j;
}

Json betti_json(const std::vector<std::size_t>& betti) { return Json(betti); }

void write_barcode_csv(std::ostream& out, const Barcode& barcode) {
  out << "dim,birth,death\n";
  for (const auto& bar : barcode.intervals)
    out << bar.dim << ',' << format_number(bar.birth) << ',' << format_number(bar.death) << '\n';
}

Json barcode_json(const Barcode& barcode) {
  Json all = Json::array();
  for (const auto& bar : barcode.intervals)
    all.push_back(Json{{"dim", bar.dim}, {"birth", number_json(bar.birth)}, {"death", number_json(bar.death)}});
  return all;
}

std::string render_barcode_ascii(const Barcode& barcode, std::size_t width) {
  if (width < 2) width = 2;
  const double hi = finite_extent(barcode);
  auto column = [&](double t) {
    return std::min(width, static_cast<std::size_t>(std::floor(t / hi * static_cast<double>(width - 1))));
  };
  std::ostringstream os;
  os << "scale 0 .. " << format_number(hi) << '\n';
  for (const auto& bar : barcode.intervals) {
    std::string row(width + 1, ' ');
    const std::size_t a = column(bar.birth);
    const std::size_t b = bar.infinite() ? width : column(bar.death);
    for (std::size_t k = a; k <= b && k <= width; ++k) row[k] = '-';
    if (bar.infinite()) row[width] = '>';
    os << 'H' << bar.dim << " |" << row << "| [" << format_number(bar.birth) << ", "
       << format_number(bar.death) << ")\n";
  }
  return os.str();
}

std::string render_barcode_svg(const Barcode& barcode) {
  const double hi = finite_extent(barcode) * 1.1;
  const double left = 40.0;
  const double plot = 560.0;
  const double row = 12.0;
  const double height = row * static_cast<double>(barcode.intervals.size()) + 40.0;
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + plot + 20 << "\" height=\"" << height
     << "\">\n";
  os << "<line x1=\"" << left << "\" y1=\"" << height - 20 << "\" x2=\"" << left + plot << "\" y2=\""
     << height - 20 << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << left << "\" y=\"" << height - 5 << "\" font-size=\"10\">0</text>\n";
  os << "<text x=\"" << left + plot - 30 << "\" y=\"" << height - 5 << "\" font-size=\"10\">"
     << format_number(hi) << "</text>\n";
  double y = 10.0;
  for (const auto& bar : barcode.intervals) {
    const double x0 = left + bar.birth / hi * plot;
    const double x1 = left + (bar.infinite() ? plot : bar.death / hi * plot);
    os << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y << "\" stroke=\""
       << colours[std::min(bar.dim, 3)] << "\" stroke-width=\"4\"/>\n";
    os << "<text x=\"4\" y=\"" << y + 4 << "\" font-size=\"10\">H" << bar.dim << "</text>\n";
    y += row;
  }
  os << "</svg>\n";
  return os.str();
}

Json crush_json(const CrushResult& result, bool with_certificates) {
  Json j;
  j["success"] = result.success;
  j["step_count"] = result.steps.size();
  if (result.center) j["center"] = *result.center;
  j["terminal"] = Json(result.terminal);
  j["terminal_diameter"] = number_json(result.terminal_diameter);
  if (!result.reason.empty()) j["reason"] = result.reason;
  Json steps = Json::array();
  for (const auto& step : result.steps) {
    Json s{{"crushed", Json(step.crushed)}, {"target", step.target}};
    if (with_certificates) {
      Json cert = Json::array();
      for (const auto& c : step.certificate)
        cert.push_back(Json{{"crushed", c.crushed}, {"radius", number_json(c.radius)}, {"ball_size", c.ball_size}});
      s["certificate"] = std::move(cert);
    }
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json union_crush_json(const UnionCrushResult& result) {
  Json j;
  j["success"] = result.success;
  j["delta1_prime"] = number_json(result.delta1_prime);
  j["step_count"] = result.steps.size();
  j["model_points_used"] = result.model_points_used;
  j["model_points_skipped"] = result.model_points_skipped;
  j["far_targets"] = result.far_targets;
  j["terminal"] = Json(result.terminal);
  if (!result.reason.empty()) j["reason"] = result.reason;
  return j;
}

Json good_cover_json(const GoodCoverReport& report) {
  Json j;
  j["good"] = report.good();
  j["crushable"] = report.crushable;
  j["homology_trivial"] = report.homology_trivial;
  j["suspect"] = report.suspect;
  j["identity_holds"] = report.identity_holds;
  Json records = Json::array();
  for (const auto& r : report.records) {
    if (r.verdict == CoverVerdict::crushable && r.identity_holds) continue;
    records.push_back(Json{{"sigma", simplex_json(r.sigma)},
                           {"size", r.size},
                           {"verdict", to_string(r.verdict)},
                           {"betti", betti_json(r.betti)},
                           {"identity_holds", r.identity_holds}});
  }
  j["exceptions"] = std::move(records);
  return j;
}

Json intersection_json(const IntersectionReport& report) {
  Json j;
  j["intersections"] = report.records.size();
  j["max_hausdorff"] = number_json(report.max_hausdorff);
  j["one_sided_empty"] = report.mismatches;
  if (report.first_mismatch) j["first_mismatch"] = simplex_json(*report.first_mismatch);
  return j;
}

Json reconstruction_json(const ReconstructionReport& r) {
  Json j;
  j["all_pass"] = r.all_pass;
  Json links = Json::array();
  for (const auto& link : r.links)
    links.push_back(Json{{"link", link.name}, {"pass", link.pass}, {"detail", link.detail}});
  j["links"] = std::move(links);
  j["centers"] = Json(r.centers);
  Json p;
  p["star_radius"] = number_json(r.star_radius);
  p["mu"] = number_json(r.mu);
  p["epsilon0"] = number_json(r.epsilon0);
  p["delta1_prime"] = number_json(r.delta1_prime);
  p["delta2_prime"] = number_json(r.delta2_prime);
  p["leverage_lower"] = number_json(r.leverage.lower);
  p["leverage_upper"] = number_json(r.leverage.upper);
  p["delta"] = number_json(r.delta);
  p["jitter"] = number_json(r.jitter);
  p["gh_bound"] = number_json(r.gh_bound);
  p["gh_below_delta"] = r.gh_below_delta;
  p["scales_in_window"] = r.scales_in_window;
  p["lebesgue"] = number_json(r.lebesgue);
  j["parameters"] = std::move(p);
  j["model_betti"] = betti_json(r.model_betti);
  j["nerve_betti"] = betti_json(r.nerve_betti);
  j["nerve_w_betti"] = betti_json(r.nerve_w_betti);
  j["complex_betti"] = betti_json(r.srips_betti);
  j["complex_counts"] = counts_json(r.srips_counts);
  j["intersections"] = intersection_json(r.intersections);
  j["good_cover"] = good_cover_json(r.good_cover);
  return j;
}

}  // namespace srips
