#include "srips/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "srips/filtration.hpp"
#include "srips/homology.hpp"
#include "srips/metric_io.hpp"
#include "srips/nerve.hpp"
#include "srips/pseudo_metric_union.hpp"
#include "srips/reconstruction.hpp"
#include "srips/sampler.hpp"
#include "srips/selective_rips.hpp"
#include "srips/union_crushing.hpp"

namespace srips::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A check that ran to completion and failed; the report is the witness.
struct CheckFailure {
  Json report;
};

std::filesystem::path output_dir(const RunConfig& config) {
  if (!config.out.empty()) return config.out;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return {};
}

void write_file(const RunConfig& config, const std::string& name, const std::string& content) {
  const auto dir = output_dir(config);
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  std::ofstream f(dir / name, std::ios::binary);
  if (!f) throw IoError("cannot write " + (dir / name).string());
  f << content;
  if (!f) throw IoError("write failed: " + (dir / name).string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (config.format == f) return;
  throw PreconditionError("format '" + config.format + "' is not supported by this command");
}

Json input_json(const RunConfig& config, const FiniteMetricSpace& space) {
  Json j;
  if (!config.sample.empty()) j["sample"] = config.sample;
  if (!config.matrix.empty()) j["matrix"] = config.matrix;
  if (!config.cloud.empty()) j["cloud"] = config.cloud;
  j["points"] = space.size();
  j["metric"] = to_string(space.kind());
  return j;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ParseError("cannot parse number '" + token + "'");
    }
  }
  return out;
}

IndexSet parse_indices(const std::string& text) {
  IndexSet out;
  for (double v : parse_numbers(text)) {
    if (v < 0 || v != std::floor(v)) throw ParseError("bad index " + format_number(v));
    out.push_back(static_cast<Index>(v));
  }
  return normalized(std::move(out));
}

// ---- commands ----

std::string cmd_complex(const RunConfig& config) {
  require_format(config, {"json", "csv"});
  const auto space = load_input(config);
  const auto scales = resolve_scales(config);
  const auto complex = build_complex(space, scales, config.dim_cap);
  std::ostringstream text;
  write_complex_text(text, complex);
  write_file(config, "complex.txt", text.str());
  write_file(config, "complex.json", dump(complex_json(complex)));
  if (config.format == "csv") return text.str();
  Json j;
  j["command"] = "complex";
  j["input"] = input_json(config, space);
  j["scales"] = scales.to_string();
  j["dim_cap"] = config.dim_cap;
  j["complex"] = complex_json(complex, false);
  return dump(j);
}

std::string cmd_betti(const RunConfig& config) {
  require_format(config, {"json"});
  const auto space = load_input(config);
  const auto scales = resolve_scales(config);
  const auto complex = build_complex(space, scales, config.dim_cap + 1);
  Json j;
  j["command"] = "betti";
  j["input"] = input_json(config, space);
  j["scales"] = scales.to_string();
  j["dim_cap"] = config.dim_cap;
  j["betti"] = betti_json(betti(complex, config.dim_cap));
  j["counts"] = Json(complex.counts());
  const auto out = dump(j);
  write_file(config, "betti.json", out);
  return out;
}

std::string cmd_barcode(const RunConfig& config, double max_birth) {
  require_format(config, {"json", "csv", "svg", "ascii"});
  const auto space = load_input(config);
  ScaleSequence profile = ScaleSequence::constant(1.0);
  if (!config.profile.empty()) profile = ScaleSequence::parse(config.profile);
  const auto filtration = build_filtration(space, profile, config.dim_cap + 1, max_birth);
  Barcode full = persistence(filtration, config.dim_cap + 1);
  Barcode bars;
  for (const auto& bar : full.intervals)
    if (bar.dim <= config.dim_cap) bars.intervals.push_back(bar);

  std::ostringstream csv;
  write_barcode_csv(csv, bars);
  const std::string svg = render_barcode_svg(bars);
  Json j;
  j["command"] = "barcode";
  j["input"] = input_json(config, space);
  j["profile"] = profile.to_string();
  j["max_birth"] = number_json(max_birth);
  j["simplices"] = filtration.size();
  j["intervals"] = barcode_json(bars);
  write_file(config, "barcode.csv", csv.str());
  write_file(config, "barcode.svg", svg);
  write_file(config, "barcode.json", dump(j));
  if (config.format == "csv") return csv.str();
  if (config.format == "svg") return svg;
  if (config.format == "ascii") return render_barcode_ascii(bars);
  return dump(j);
}

struct CrushFlags {
  std::string strategy = "farthest-first";
  std::optional<Index> center;
  bool contiguity = false;
  std::optional<double> glue_jitter;
  double alpha = 1.0;
};

std::string cmd_crush(const RunConfig& config, const CrushFlags& flags) {
  require_format(config, {"json"});
  const auto space = load_input(config);
  const auto scales = resolve_scales(config);
  Json j;
  j["command"] = "crush";
  j["input"] = input_json(config, space);
  j["scales"] = scales.to_string();

  if (flags.glue_jitter) {
    // Crush a jittered copy inside the ambient gluing with the sample.
    if (space.kind() != MetricKind::euclidean) throw PreconditionError("glued crushing needs a euclidean sample");
    const int dim = space.coordinate_dim();
    std::vector<double> coords;
    std::mt19937_64 rng(config.seed);
    const double amp = *flags.glue_jitter / std::sqrt(static_cast<double>(dim));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (Index i = 0; i < space.size(); ++i)
      for (double c : space.point(i)) coords.push_back(c + amp * unit(rng));
    const auto copy = FiniteMetricSpace::euclidean(std::move(coords), dim);
    const auto u = PseudoMetricUnion::ambient(space, copy);
    UnionCrushParams params;
    params.alpha = flags.alpha;
    params.divisor = config.divisor;
    params.keep_certificates = false;
    const auto result = crushable_in_union(u, scales, params);
    j["declared_bound"] = number_json(u.declared_bound());
    j["result"] = union_crush_json(result);
    write_file(config, "crush.json", dump(j));
    if (!result.success) throw CheckFailure{j};
    return dump(j);
  }

  CrushOptions options;
  if (flags.strategy == "exhaustive")
    options.strategy = CrushStrategy::exhaustive;
  else if (flags.strategy != "farthest-first")
    throw ParseError("unknown strategy '" + flags.strategy + "'");
  options.center = flags.center;
  const auto result = greedy_crushable(space, scales, options);
  const auto all = iota_set(space.size());
  const auto replay = verify_sequence(space, all, result.steps, scales);
  j["result"] = crush_json(result, false);
  j["replay_valid"] = replay.valid;
  if (!replay.valid) j["replay_reason"] = replay.reason;
  bool ok = result.success && replay.valid;
  if (flags.contiguity && result.success) {
    LiveSet live(space.size(), true);
    std::size_t checked = 0;
    std::optional<Json> violation;
    for (std::size_t s = 0; s < result.steps.size() && !violation; ++s) {
      const auto& step = result.steps[s];
      if (step.crushed.size() == 1) {
        const auto c = contiguity_certificate(space, live, step, scales, config.dim_cap);
        checked += c.simplices_checked;
        if (!c.holds) violation = Json{{"step", s}, {"simplex", Json(*c.violation)}};
      }
      apply_crush(space, live, step, scales);
    }
    j["contiguity"] = Json{{"holds", !violation}, {"simplices_checked", checked}};
    if (violation) j["contiguity"]["violation"] = *violation;
    ok = ok && !violation;
  }
  write_file(config, "crush.json", dump(crush_json(result, true)));
  if (!ok) throw CheckFailure{j};
  return dump(j);
}

struct NerveFlags {
  double alpha = 0.0;
  std::string centers;
};

std::string cmd_nerve_check(const RunConfig& config, const NerveFlags& flags) {
  require_format(config, {"json"});
  const auto space = load_input(config);
  if (!(flags.alpha > 0.0)) throw PreconditionError("--alpha must be positive");
  const IndexSet centers = flags.centers.empty() ? greedy_net(space, flags.alpha / 2.0) : parse_indices(flags.centers);
  const Cover cover = build_cover(space, centers, flags.alpha);
  const auto nerve = nerve_complex(cover, config.size_cap);
  Json j;
  j["command"] = "nerve-check";
  j["input"] = input_json(config, space);
  j["alpha"] = flags.alpha;
  j["centers"] = Json(centers);
  j["covering"] = cover.covering;
  j["nerve"] = complex_json(nerve, false);
  j["nerve_betti"] = betti_json(betti(nerve, std::min<int>(config.dim_cap, static_cast<int>(config.size_cap) - 2)));
  const auto mu = mu_margin(space, centers, flags.alpha, config.size_cap);
  j["mu"] = mu ? number_json(*mu) : Json(nullptr);
  j["critical_gap_below"] = number_json(critical_gap_below(space, centers, flags.alpha, config.size_cap));
  const auto lev = leverage_margins(space, centers, flags.alpha);
  j["leverage"] = Json{{"lower", number_json(lev.lower)}, {"upper", number_json(lev.upper)}};
  bool ok = cover.covering;
  if (cover.covering) j["lebesgue"] = number_json(lebesgue_number(cover));
  if (!config.scales.empty() || config.rips) {
    const auto scales = resolve_scales(config);
    const auto report = good_cover_check(cover, scales, config.dim_cap, config.size_cap);
    j["scales"] = scales.to_string();
    j["good_cover"] = good_cover_json(report);
    ok = ok && report.good();
  }
  const auto out = dump(j);
  write_file(config, "nerve.json", out);
  if (!ok) throw CheckFailure{j};
  return out;
}

struct ReconstructFlags {
  double alpha = 0.7;
  std::size_t m = 2;
  std::optional<double> jitter;
  double jitter_fraction = 0.25;
};

std::string cmd_reconstruct(const RunConfig& config, const ReconstructFlags& flags) {
  require_format(config, {"json"});
  ReconstructionConfig rc;
  if (!config.sample.empty()) {
    const auto spec = parse_sample_spec(config.sample);
    const auto* circle = std::get_if<CircleShape>(&spec.shape);
    if (!circle || !circle->geodesic) throw PreconditionError("reconstruct models a geodesic circle sample");
    rc.points = spec.count;
    rc.circle_radius = circle->radius;
  }
  if (!config.scales.empty()) rc.scales = ScaleSequence::parse(config.scales);
  rc.alpha = flags.alpha;
  rc.m = flags.m;
  rc.jitter = flags.jitter;
  rc.jitter_fraction = flags.jitter_fraction;
  rc.seed = config.seed;
  rc.dim_cap = config.dim_cap;
  rc.size_cap = config.size_cap;
  rc.divisor = config.divisor;
  const auto report = run_reconstruction(rc);
  Json j;
  j["command"] = "reconstruct";
  j["scales"] = rc.scales.to_string();
  j["alpha"] = rc.alpha;
  j["m"] = rc.m;
  j["report"] = reconstruction_json(report);
  const auto out = dump(j);
  write_file(config, "reconstruct.json", out);
  if (!report.all_pass) throw CheckFailure{j};
  return out;
}

std::string cmd_counterexample(const RunConfig& config, CounterexampleConfig cc, const std::string& scales,
                               double spacing) {
  require_format(config, {"json"});
  if (!scales.empty()) cc.scales = ScaleSequence::parse(scales);
  if (spacing > 0.0) cc.spacing = spacing;
  const auto report = run_counterexample(cc);
  std::ostringstream text;
  write_complex_text(text, report.complex);
  write_file(config, "complex.txt", text.str());
  Json j = counterexample_json(report);
  const auto out = dump(j);
  write_file(config, "counterexample.json", out);
  return out;
}

std::string cmd_sample(const RunConfig& config) {
  require_format(config, {"json", "csv"});
  if (config.sample.empty()) throw PreconditionError("sample needs --sample");
  const auto space = load_input(config);
  std::ostringstream os;
  if (config.format == "csv") {
    if (space.kind() == MetricKind::matrix) throw PreconditionError("this sample has no coordinates");
    write_cloud_csv(os, space);
    write_file(config, "sample.csv", os.str());
  } else {
    write_matrix_json(os, space);
    write_file(config, "sample.json", os.str());
  }
  return os.str();
}

Json error_json(const char* kind, const std::string& message, const std::vector<Index>& witness = {}) {
  Json j{{"error", kind}, {"message", message}};
  if (!witness.empty()) j["witness"] = Json(witness);
  return j;
}

}  // namespace

FiniteMetricSpace load_input(const RunConfig& config) {
  const int sources = !config.sample.empty() + !config.matrix.empty() + !config.cloud.empty();
  if (sources != 1) throw PreconditionError("give exactly one of --sample, --matrix, --cloud");
  if (!config.sample.empty()) return sample(parse_sample_spec(config.sample));
  try {
    if (!config.matrix.empty()) return load_matrix_file(config.matrix, config.triangle_tolerance);
    return load_cloud_file(config.cloud, config.metric, config.metric_params);
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  }
}

ScaleSequence resolve_scales(const RunConfig& config) {
  if (!config.scales.empty() && config.rips) throw PreconditionError("give --scales or --rips, not both");
  if (!config.scales.empty()) return ScaleSequence::parse(config.scales);
  if (config.rips) return ScaleSequence::constant(*config.rips);
  throw PreconditionError("this command needs --scales or --rips");
}

CounterexampleReport run_counterexample(const CounterexampleConfig& config) {
  const std::size_t n = config.n;
  if (n < 1) throw PreconditionError("n must be >= 1");
  CounterexampleReport report;
  if (config.scales) {
    report.scales = *config.scales;
  } else {
    std::vector<double> r{config.base};
    for (std::size_t i = 2; i <= n; ++i) r.push_back(0.9 * r.back() / static_cast<double>(i + 1));
    report.scales = ScaleSequence(std::move(r));
  }
  const auto& r = report.scales;
  for (std::size_t i = 2; i <= n; ++i) {
    std::ostringstream os;
    os << "r_" << i - 1 << " = " << format_number(r(i - 1)) << " > " << i + 1 << " * r_" << i << " = "
       << format_number(static_cast<double>(i + 1) * r(i));
    if (!(r(i - 1) > static_cast<double>(i + 1) * r(i)))
      throw ValidationError("scale constraint fails: " + os.str(), {static_cast<Index>(i)});
    report.constraints.push_back(os.str());
  }
  const double lo = r(n);
  const double hi = n >= 2 ? r(n - 1) / static_cast<double>(n) : std::numeric_limits<double>::infinity();
  report.spacing = config.spacing ? *config.spacing : (n >= 2 ? (lo + hi) / 2.0 : 2.0 * lo);
  if (!(report.spacing > lo && report.spacing < hi))
    throw ValidationError("spacing " + format_number(report.spacing) + " is not in (r_n, r_{n-1} / n) = (" +
                          format_number(lo) + ", " + format_number(hi) + ")");
  std::vector<double> coords;
  for (std::size_t k = 0; k <= n; ++k) coords.push_back(static_cast<double>(k) * report.spacing);
  report.space = FiniteMetricSpace::euclidean(std::move(coords), 1);
  const int cap = config.dim_cap >= 0 ? config.dim_cap : static_cast<int>(n);
  report.complex = build_complex(report.space, r, cap + 1);
  report.betti = betti(report.complex, cap);
  report.top_simplices = report.complex.count(static_cast<int>(n));
  CrushOptions options;
  options.keep_certificates = false;
  report.crush = greedy_crushable(report.space, r, options);
  return report;
}

Json counterexample_json(const CounterexampleReport& report) {
  Json j;
  j["command"] = "counterexample";
  j["n"] = report.space.size() - 1;
  j["scales"] = report.scales.to_string();
  j["constraints"] = Json(report.constraints);
  j["spacing"] = number_json(report.spacing);
  Json pts = Json::array();
  for (Index i = 0; i < report.space.size(); ++i) pts.push_back(report.space.point(i)[0]);
  j["points"] = std::move(pts);
  j["counts"] = Json(report.complex.counts());
  j["top_simplices"] = report.top_simplices;
  j["betti"] = betti_json(report.betti);
  j["crushable"] = report.crush.success;
  if (!report.crush.reason.empty()) j["crush_reason"] = report.crush.reason;
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Selective Rips complexes, crushings, covers and GF(2) homology"};
  app.require_subcommand(1);
  RunConfig config;
  std::string rips_text;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--sample", config.sample, "sampler spec, e.g. circle:r=1,n=60");
      sub->add_option("--matrix", config.matrix, "distance matrix file (.json or lower-triangular text)");
      sub->add_option("--cloud", config.cloud, "point cloud CSV");
      sub->add_option("--metric", config.metric, "cloud metric: euclidean | circle-geodesic | flat-torus");
      sub->add_option("--metric-param", config.metric_params, "circle radius or torus sides")->delimiter(',');
      sub->add_option("--triangle-tolerance", config.triangle_tolerance);
    }
    sub->add_option("--scales", config.scales, "scale sequence a,b,c (last entry repeats)");
    sub->add_option("--dim-cap", config.dim_cap)->check(CLI::NonNegativeNumber);
    sub->add_option("--size-cap", config.size_cap)->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed);
    sub->add_option("--k-divisor", config.divisor);
    sub->add_option("--out", config.out, std::string("output directory (default $") + kOutDirEnv + ")");
    sub->add_option("--format", config.format, "json | csv | svg | ascii");
  };
  auto add_rips = [&](CLI::App* sub) {
    sub->add_option("--rips", rips_text, "Rips radius (constant scales)");
  };

  std::function<std::string()> action;

  auto* complex = app.add_subcommand("complex", "build sRips(X; r~) and serialize it");
  add_common(complex, true);
  add_rips(complex);
  complex->callback([&] { action = [&] { return cmd_complex(config); }; });

  auto* betti_cmd = app.add_subcommand("betti", "GF(2) Betti numbers of sRips(X; r~)");
  add_common(betti_cmd, true);
  add_rips(betti_cmd);
  betti_cmd->callback([&] { action = [&] { return cmd_betti(config); }; });

  double max_birth = std::numeric_limits<double>::infinity();
  auto* barcode = app.add_subcommand("barcode", "persistence barcode of the profile filtration");
  add_common(barcode, true);
  barcode->add_option("--profile", config.profile, "profile p_1,p_2,... with p_1 = 1 (default constant)");
  barcode->add_option("--max-birth", max_birth, "largest filtration value built");
  barcode->callback([&] { action = [&] { return cmd_barcode(config, max_birth); }; });

  CrushFlags crush_flags;
  Index crush_center = 0;
  auto* crush = app.add_subcommand("crush", "search and certify a sequence of r~-crushings");
  add_common(crush, true);
  add_rips(crush);
  crush->add_option("--strategy", crush_flags.strategy, "farthest-first | exhaustive");
  auto* center_opt = crush->add_option("--center", crush_center, "farthest-first centre point");
  crush->add_flag("--contiguity", crush_flags.contiguity, "check contiguity of every one-point step");
  crush->add_option("--glue-jitter", crush_flags.glue_jitter, "crush a jittered copy glued to the sample");
  crush->add_option("--alpha", crush_flags.alpha, "radius of the ball holding the sample (glued mode)");
  crush->callback([&] {
    if (*center_opt) crush_flags.center = crush_center;
    action = [&] { return cmd_crush(config, crush_flags); };
  });

  NerveFlags nerve_flags;
  auto* nerve = app.add_subcommand("nerve-check", "cover by alpha-balls: nerve, margins, good-cover check");
  add_common(nerve, true);
  add_rips(nerve);
  nerve->add_option("--alpha", nerve_flags.alpha, "ball radius")->required();
  nerve->add_option("--centers", nerve_flags.centers, "centre indices (default greedy alpha/2-net)");
  nerve->callback([&] { action = [&] { return cmd_nerve_check(config, nerve_flags); }; });

  ReconstructFlags rec_flags;
  auto* reconstruct = app.add_subcommand("reconstruct", "end-to-end reconstruction on a circle sample");
  add_common(reconstruct, false);
  reconstruct->add_option("--sample", config.sample, "geodesic circle spec (default circle:r=1,n=60)");
  reconstruct->add_option("--alpha", rec_flags.alpha);
  reconstruct->add_option("--m", rec_flags.m)->check(CLI::Range(2, 1000000));
  reconstruct->add_option("--jitter", rec_flags.jitter, "absolute angular jitter (default fraction of delta)");
  reconstruct->add_option("--jitter-fraction", rec_flags.jitter_fraction);
  reconstruct->callback([&] { action = [&] { return cmd_reconstruct(config, rec_flags); }; });

  CounterexampleConfig cc;
  std::string cc_scales;
  double cc_spacing = 0.0;
  auto* counter = app.add_subcommand("counterexample", "n+1 spread points: a sphere that does not crush");
  counter->add_option("--n", cc.n)->check(CLI::PositiveNumber);
  counter->add_option("--base", cc.base, "r_1 of the default scale sequence");
  counter->add_option("--scales", cc_scales);
  counter->add_option("--spacing", cc_spacing);
  counter->add_option("--dim-cap", cc.dim_cap);
  counter->add_option("--out", config.out);
  counter->add_option("--format", config.format);
  counter->callback([&] { action = [&] { return cmd_counterexample(config, cc, cc_scales, cc_spacing); }; });

  auto* sample_cmd = app.add_subcommand("sample", "emit a sample as a distance matrix or point cloud");
  sample_cmd->add_option("--sample", config.sample)->required();
  sample_cmd->add_option("--out", config.out);
  sample_cmd->add_option("--format", config.format, "json (matrix) | csv (coordinates)");
  sample_cmd->callback([&] { action = [&] { return cmd_sample(config); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (!rips_text.empty()) {
      const auto values = parse_numbers(rips_text);
      if (values.size() != 1) throw ParseError("--rips takes one radius");
      config.rips = values.front();
    }
    out << action();
    return kSuccess;
  } catch (const CheckFailure& f) {
    out << dump(f.report);
    return kCheckFailed;
  } catch (const ParseError& e) {
    err << dump(error_json("parse", e.what()));
    return kInputError;
  } catch (const IoError& e) {
    err << dump(error_json("io", e.what()));
    return kInputError;
  } catch (const ValidationError& e) {
    out << dump(error_json("validation", e.what(), e.witness()));
    return kCheckFailed;
  } catch (const PreconditionError& e) {
    out << dump(error_json("precondition", e.what()));
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << dump(error_json("internal", e.what()));
    return kInputError;
  }
}

}  // namespace srips::cli
