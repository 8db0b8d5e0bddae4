#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "srips/filtration.hpp"
#include "srips/homology.hpp"
#include "srips/sampler.hpp"
#include "srips/selective_rips.hpp"

using namespace srips;

namespace {

std::vector<oracle::Vertices> as_vertices(const SimplicialComplex& k) {
  std::vector<oracle::Vertices> out;
  for (const auto& s : k.all()) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<oracle::Bar> as_bars(const Barcode& b) {
  std::vector<oracle::Bar> out;
  for (const auto& i : b.intervals) out.push_back({i.dim, i.birth, i.death});
  return out;
}

bool same_bars(const std::vector<oracle::Bar>& a, const std::vector<oracle::Bar>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].dim != b[k].dim || a[k].birth != b[k].birth || a[k].death != b[k].death) return false;
  return true;
}

}  // namespace

TEST_CASE("static homology against dense elimination") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> radius(0.3, 0.6);
  for (int t = 0; t < 12; ++t) {
    const auto d = oracle::random_planar(14, rng);
    const auto x = build_space(d);
    const auto k = build_complex(x, ScaleSequence({radius(rng), 0.25, 0.15}), 3);
    CHECK(boundary_squared_vanishes(k));
    const auto b = betti(k, 2);
    CHECK(b == oracle::dense_betti(as_vertices(k), 2));
    const auto full = betti(k, k.dimension());
    long chi = 0;
    for (std::size_t p = 0; p < full.size(); ++p) chi += (p % 2 ? -1L : 1L) * static_cast<long>(full[p]);
    CHECK(chi == euler_characteristic(k));
  }
}

TEST_CASE("known spaces") {
  SECTION("hollow triangle and tetrahedron boundary") {
    const auto circle = SimplicialComplex::closure(3, std::vector<Simplex>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(betti(circle, 2) == std::vector<std::size_t>{1, 1, 0});
    const auto sphere =
        SimplicialComplex::closure(4, std::vector<Simplex>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(betti(sphere, 3) == std::vector<std::size_t>{1, 0, 1, 0});
    CHECK(euler_characteristic(sphere) == 2);
  }
  SECTION("GF(2) sees the projective plane") {
    // 6-vertex RP^2
    const std::vector<Simplex> rp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                   {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
    const auto k = SimplicialComplex::closure(6, rp2);
    CHECK(betti(k, 2) == std::vector<std::size_t>{1, 1, 1});
  }
  SECTION("circle sample") {
    const auto x = sample(parse_sample_spec("circle:r=1,n=60"));
    CHECK(betti(build_complex(x, ScaleSequence({0.6, 0.4}), 4), 3) == std::vector<std::size_t>{1, 1, 0, 0});
  }
}

TEST_CASE("persistence matches the plain dense reduction") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 6; ++t) {
    const auto d = oracle::random_planar(15, rng);
    const auto x = build_space(d);
    std::vector<oracle::Vertices> s;
    std::vector<double> births;
    oracle::rips_filtration(d, 3, s, births);
    const auto f = build_filtration(x, ScaleSequence::constant(1.0), 3);
    REQUIRE(f.size() == s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(f.simplices()[k].vertices == Simplex(s[k].begin(), s[k].end()));
      CHECK(f.simplices()[k].birth == births[k]);
    }
    auto expected = oracle::dense_persistence(s, births);
    const auto plain = persistence(f, 3, Reduction::plain);
    const auto clearing = persistence(f, 3, Reduction::clearing);
    CHECK(plain == clearing);
    CHECK(same_bars(as_bars(plain), expected));
  }
}

TEST_CASE("selective filtrations: oracle barcode and sublevel sets") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 5; ++t) {
    const auto d = oracle::random_planar(12, rng);
    const auto x = build_space(d);
    const ScaleSequence profile({1.0, 0.6, 0.4});
    const auto f = build_filtration(x, profile, 3);
    std::vector<oracle::Vertices> s;
    std::vector<double> births;
    for (const auto& fs : f.simplices()) {
      s.emplace_back(fs.vertices.begin(), fs.vertices.end());
      births.push_back(fs.birth);
    }
    const auto bars = persistence(f, 2, Reduction::plain);
    auto expected = oracle::dense_persistence(s, births);
    std::erase_if(expected, [](const oracle::Bar& b) { return b.dim > 2; });
    CHECK(same_bars(as_bars(bars), expected));

    // Between consecutive distinct births, the sublevel set is the strict complex.
    std::set<double> values;
    for (double b : births) values.insert(b);
    std::vector<double> v(values.begin(), values.end());
    for (std::size_t k = 0; k + 1 < v.size(); k += 7) {
      const double mid = 0.5 * (v[k] + v[k + 1]);
      const auto sub = f.sublevel(mid);
      CHECK(sub == build_complex(x, profile.scaled(mid), 3));
      // persistence agrees with static Betti numbers
      const auto b = betti(sub, 2);
      for (int dim = 0; dim <= 2; ++dim) CHECK(bars.rank_at(dim, mid) == b[dim]);
    }
  }
}

TEST_CASE("birth values") {
  const auto x = FiniteMetricSpace::euclidean({0, 1, 3, 6}, 1);
  CHECK(birth_value(x, Simplex{0}, ScaleSequence::constant(1.0)) == 0.0);
  CHECK(birth_value(x, Simplex{0, 1, 2}, ScaleSequence::constant(1.0)) == 3.0);
  // i = 2: {0,1},{3} has width 1, scaled by 1 / 0.5
  CHECK(birth_value(x, Simplex{0, 1, 2}, ScaleSequence({1.0, 0.5})) == 3.0);
  CHECK(birth_value(x, Simplex{0, 1, 2}, ScaleSequence({1.0, 0.25})) == 4.0);
  CHECK_THROWS(build_filtration(x, ScaleSequence({2.0, 1.0}), 2));
}

TEST_CASE("filtration validation") {
  CHECK_THROWS_AS(Filtration::from_simplices(2, {{{0}, 0.0}, {{1}, 1.0}, {{0, 1}, 0.5}}), ValidationError);
  CHECK_THROWS_AS(Filtration::from_simplices(2, {{{0}, 0.0}, {{0, 1}, 0.5}}), ValidationError);
  const auto f = Filtration::from_simplices(2, {{{0, 1}, 0.5}, {{1}, 0.0}, {{0}, 0.0}});
  CHECK(f.simplices().front().vertices == Simplex{0});
}

TEST_CASE("a single point has one infinite bar") {
  const auto x = build_space({{0}});
  const auto bars = persistence(build_filtration(x, ScaleSequence::constant(1.0), 2), 2);
  REQUIRE(bars.intervals.size() == 1);
  CHECK(bars.intervals[0].dim == 0);
  CHECK(bars.intervals[0].infinite());
}

TEST_CASE("induced ranks") {
  const auto x = sample(parse_sample_spec("circle:r=1,n=60"));
  const auto small = build_complex(x, ScaleSequence({0.45, 0.3}), 3);
  const auto big = build_complex(x, ScaleSequence({0.6, 0.4}), 3);
  CHECK(induced_rank(small, big, 0) == 1);
  CHECK(induced_rank(small, big, 1) == 1);
  CHECK_THROWS_AS(induced_rank(big, small, 1), PreconditionError);
  // A loop that dies in the larger complex.
  const auto loop = SimplicialComplex::closure(3, std::vector<Simplex>{{0, 1}, {1, 2}, {0, 2}});
  const auto disk = SimplicialComplex::closure(3, std::vector<Simplex>{{0, 1, 2}});
  CHECK(induced_rank(loop, disk, 1) == 0);
  CHECK(induced_rank(loop, loop, 1) == 1);
}
