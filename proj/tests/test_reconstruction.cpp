#include <catch_amalgamated.hpp>

#include "srips/reconstruction.hpp"

using namespace srips;

TEST_CASE("circle reconstruction passes every link") {
  const auto r = run_reconstruction({});
  for (const auto& link : r.links) INFO(link.name << ": " << link.detail);
  CHECK(r.all_pass);
  REQUIRE(r.links.size() == 4);
  CHECK(r.srips_betti == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK(r.model_betti == r.srips_betti);
  CHECK(r.gh_below_delta);
  CHECK(r.gh_bound > 0.0);
  CHECK(r.delta <= r.delta2_prime);
  CHECK(r.delta <= 0.7 / 8);
  CHECK(r.delta <= r.mu / 2);
  CHECK(r.centers.size() == 15);
  CHECK(!r.scales_in_window);
}

TEST_CASE("an unperturbed copy passes trivially") {
  ReconstructionConfig c;
  c.jitter = 0.0;
  const auto r = run_reconstruction(c);
  CHECK(r.all_pass);
  CHECK(r.gh_bound == 0.0);
  CHECK(r.intersections.max_hausdorff == 0.0);
}

TEST_CASE("a large perturbation breaks the cover comparison") {
  ReconstructionConfig c;
  c.jitter = 0.2;
  const auto r = run_reconstruction(c);
  CHECK(!r.gh_below_delta);
  CHECK(!r.links[1].pass);
  CHECK(r.intersections.max_hausdorff >= r.delta1_prime / 2);
}

TEST_CASE("preconditions") {
  ReconstructionConfig c;
  c.alpha = 0.9;  // above star radius / 2 = pi / 4
  CHECK_THROWS_AS(run_reconstruction(c), PreconditionError);
  c = {};
  c.m = 1;
  CHECK_THROWS_AS(run_reconstruction(c), PreconditionError);
}
