#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "srips/sampler.hpp"
#include "srips/union_crushing.hpp"

using namespace srips;

namespace {

FiniteMetricSpace jittered(const FiniteMetricSpace& g, double amplitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> coords;
  for (Index i = 0; i < g.size(); ++i) {
    const auto p = g.point(i);
    // Stay inside the open unit disk.
    double x = p[0] + amplitude * u(rng) / std::sqrt(2.0);
    double y = p[1] + amplitude * u(rng) / std::sqrt(2.0);
    const double n = std::hypot(x, y);
    if (n >= 0.999) {
      x *= 0.999 / n;
      y *= 0.999 / n;
    }
    coords.push_back(x);
    coords.push_back(y);
  }
  return FiniteMetricSpace::euclidean(std::move(coords), 2);
}

}  // namespace

TEST_CASE("a perturbed copy of a dense disk crushes inside the gluing") {
  const ScaleSequence scales({0.9, 0.8});
  const auto left = dense_disk_grid(1.0, delta1(0.8, 1.0));
  const double dp = delta1_prime(0.8, 1.0);
  const auto right = jittered(left, 0.5 * dp, 9);
  const auto u = PseudoMetricUnion::ambient(left, right);
  REQUIRE(u.declared_bound() < dp);
  UnionCrushParams params;
  params.alpha = 1.0;
  const auto r = crushable_in_union(u, scales, params);
  REQUIRE(r.success);
  CHECK(r.delta1_prime == dp);
  CHECK(r.terminal.size() == 1);
  CHECK(r.model_points_used > 0);
  CHECK(verify_sequence(right, iota_set(right.size()), r.steps, scales).valid);
}

TEST_CASE("glued crushing preconditions") {
  const ScaleSequence scales({0.9, 0.8});
  const auto left = dense_disk_grid(1.0, 0.2);
  UnionCrushParams params;
  params.alpha = 1.0;
  SECTION("declared bound too large") {
    const auto right = jittered(left, 0.05, 1);
    const auto u = PseudoMetricUnion::ambient(left, right);
    CHECK_THROWS_AS(crushable_in_union(u, scales, params), PreconditionError);
  }
  SECTION("alpha below r_1") {
    const auto u = PseudoMetricUnion::ambient(left, left);
    params.alpha = 0.85;
    CHECK_THROWS_AS(crushable_in_union(u, scales, params), PreconditionError);
  }
  SECTION("model not euclidean") {
    const auto c = sample(parse_sample_spec("circle:r=1,n=10"));
    const auto u = glue(c, c, identity_correspondence(10), 0.0);
    CHECK_THROWS_AS(crushable_in_union(u, scales, params), PreconditionError);
  }
  SECTION("identical copy") {
    const auto u = PseudoMetricUnion::ambient(left, left);
    const auto r = crushable_in_union(u, scales, params);
    CHECK(r.success);
    CHECK(verify_sequence(left, iota_set(left.size()), r.steps, scales).valid);
  }
}

TEST_CASE("dense gluing tables crush the same way") {
  const ScaleSequence scales({0.9, 0.8});
  const auto left = dense_disk_grid(1.0, delta1(0.8, 1.0));
  const double dp = delta1_prime(0.8, 1.0);
  const auto right = jittered(left, 0.4 * dp, 3);
  const auto corr = identity_correspondence(left.size());
  const auto u = glue(left, right, corr, distortion(left, right, corr) / 2);
  UnionCrushParams params;
  params.alpha = 1.0;
  const auto r = crushable_in_union(u, scales, params);
  REQUIRE(r.success);
  CHECK(verify_sequence(right, iota_set(right.size()), r.steps, scales).valid);
}
