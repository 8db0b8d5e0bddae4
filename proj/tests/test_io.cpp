#include <catch_amalgamated.hpp>

#include <sstream>

#include "srips/homology.hpp"
#include "srips/metric_io.hpp"
#include "srips/report_io.hpp"
#include "srips/sampler.hpp"
#include "srips/selective_rips.hpp"

using namespace srips;

TEST_CASE("lower-triangular round trip") {
  const auto x = sample(parse_sample_spec("circle:r=1,n=7"));
  std::stringstream ss;
  write_lower_triangular(ss, x);
  const auto y = read_lower_triangular(ss);
  CHECK(y.to_matrix() == x.to_matrix());
}

TEST_CASE("lower-triangular parsing") {
  std::istringstream in("# three points\n\n1\n2,1\n");
  const auto x = read_lower_triangular(in);
  REQUIRE(x.size() == 3);
  CHECK(x(2, 0) == 2.0);
  std::istringstream one("\n");
  CHECK(read_lower_triangular(one).size() == 1);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_lower_triangular(empty), ParseError);
  std::istringstream ragged("\n1\n2\n");
  CHECK_THROWS_AS(read_lower_triangular(ragged), ParseError);
  std::istringstream text("\n1\n2,abc\n");
  CHECK_THROWS_AS(read_lower_triangular(text), ParseError);
  std::istringstream broken("\n1\n5,1\n");
  CHECK_THROWS_AS(read_lower_triangular(broken), ValidationError);
}

TEST_CASE("json matrix round trip") {
  const auto x = build_space({{0, 1, 2}, {1, 0, 1.5}, {2, 1.5, 0}});
  std::stringstream ss;
  write_matrix_json(ss, x);
  CHECK(read_matrix_json(ss).to_matrix() == x.to_matrix());
  std::istringstream bad("[[0,1],[1]]");
  CHECK_THROWS(read_matrix_json(bad));
}

TEST_CASE("cloud csv") {
  std::istringstream in("0,0\n3,4\n");
  const auto x = read_cloud_csv(in, "euclidean");
  CHECK(x(0, 1) == 5.0);
  std::istringstream angles("0\n3.14159\n");
  const auto c = read_cloud_csv(angles, "circle-geodesic", {1.0});
  CHECK(c(0, 1) == Catch::Approx(3.14159));
  std::istringstream torus("0.1,0.1\n0.9,0.9\n");
  const auto t = read_cloud_csv(torus, "flat-torus", {1.0, 1.0});
  CHECK(t(0, 1) == Catch::Approx(std::sqrt(0.08)));
  std::istringstream bad("0,0\n1\n");
  CHECK_THROWS_AS(read_cloud_csv(bad, "euclidean"), ParseError);
  std::istringstream unknown("0\n");
  CHECK_THROWS(read_cloud_csv(unknown, "hyperbolic"));
  const auto d = sample(parse_sample_spec("disk:r=1,n=30"));
  std::stringstream ss;
  write_cloud_csv(ss, d);
  CHECK(read_cloud_csv(ss, "euclidean").to_matrix() == d.to_matrix());
}

TEST_CASE("complex text round trip") {
  const auto x = sample(parse_sample_spec("circle:r=1,n=12"));
  const auto k = build_complex(x, ScaleSequence({1.2, 0.8}), 2);
  std::stringstream ss;
  write_complex_text(ss, k);
  const auto back = read_complex_text(ss);
  CHECK(back.all() == k.all());
  std::istringstream bad("1 0\n");
  CHECK_THROWS_AS(read_complex_text(bad), ParseError);
  std::istringstream open("1 0 1\n");
  CHECK_THROWS_AS(read_complex_text(open), ValidationError);
}

TEST_CASE("barcode csv and renderings") {
  Barcode b;
  b.intervals = {{0, 0.0}, {1, 0.25, 1.5}};
  std::ostringstream csv;
  write_barcode_csv(csv, b);
  CHECK(csv.str() == "dim,birth,death\n0,0,inf\n1,0.25,1.5\n");
  const auto ascii = render_barcode_ascii(b, 20);
  CHECK(ascii.find("H1") != std::string::npos);
  CHECK(ascii.find('>') != std::string::npos);
  const auto svg = render_barcode_svg(b);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  const auto j = barcode_json(b);
  CHECK(j[0]["death"] == "inf");
  CHECK(j[1]["death"] == 1.5);
}

TEST_CASE("number formatting is shortest round trip") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
}
