// Copyright 2026 The dwdecomp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "dwd/auctions.hpp"
#include "dwd/dw_solver.hpp"
#include "dwd/errors.hpp"
#include "dwd/oracles.hpp"
#include "support/brute_force.hpp"

namespace dwd {
namespace {

using Approx = doctest::Approx;

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const SolverError& e) {
    return e.kind();
  }
  FAIL("expected a SolverError");
  return ErrorKind::kInternal;
}

std::vector<double> mixed_costs(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 10);
  std::vector<double> c(n);
  for (double& v : c) v = d(rng);
  return c;
}

TEST_CASE("packing wrap examples") {
  const auto inst = testing::example_instance();
  const ExactDpOracle dp(inst);
  const PackingWrap oracle(dp);

  const auto x = oracle.best_point(
      std::vector<double>{-4, -4, -4, -4, 1, 4, 4, 6, 0, 1, 1, 1});
  IntegerPoint want(12);
  want.set(inst.variable(1, 4), 1);
  CHECK(x == want);

  CHECK(oracle.best_point(std::vector<double>(12, -1.0)).is_zero());

  const std::vector<double> c = build_lp(inst).c;
  CHECK(oracle.best_point(c) == dp.best_point(c));
  CHECK(oracle.dimension() == 12);
}

TEST_CASE("packing wrap zeroes negative coordinates") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = generate_capped_instance(1 + seed % 3, 1 + seed % 5, seed, 10);
    const ExactDpOracle dp(inst);
    const PackingWrap oracle(dp);
    const auto c = mixed_costs(inst.variable_count(), rng);
    const auto x = oracle.best_point(c);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] < 0) CHECK(x[j] == 0);
    }
    CHECK(is_feasible_assignment(inst, x));
  }
}

TEST_CASE("packing wrap dominates every vertex of the halved relaxation") {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = generate_capped_instance(1 + seed % 2, 1 + seed % 3, seed, 10);
    const Polytope p = scale_polytope(build_lp(inst).polytope(), 2.0);
    const auto vertices = testing::enumerate_vertices(p.a, p.b);
    const ExactDpOracle dp(inst);
    const PackingWrap oracle(dp);
    for (int k = 0; k < 5; ++k) {
      const auto c = mixed_costs(inst.variable_count(), rng);
      const double got = oracle.best_point(c).dot(c);
      for (const auto& v : vertices) CHECK(got >= dot(c, v) - 1e-9);
    }
  }
}

TEST_CASE("owning packing oracle") {
  auto inner = std::make_shared<ExactDpOracle>(testing::example_instance());
  const auto oracle = make_packing_oracle(inner);
  CHECK(oracle->dimension() == 12);
  CHECK(oracle->best_point(std::vector<double>(12, -2.0)).is_zero());
}

TEST_CASE("scaling") {
  const Polytope mup = build_lp(testing::example_instance()).polytope();
  CHECK(scale_polytope(mup, 2.0).b == std::vector<double>{.5, .5, .5, 2});
  CHECK(scale_polytope(mup, 1.0).b == mup.b);
  CHECK(scale_polytope(mup, 2.0).a == mup.a);
  const Polytope one(DenseMatrix{{1.0}}, {3});
  CHECK(scale_polytope(one, 3.0).b == std::vector<double>{1});
  CHECK((ScaledPolytope{one, 3.0}.effective().b == std::vector<double>{1}));
}

TEST_CASE("scaling rejects beta below one") {
  const Polytope one(DenseMatrix{{1.0}}, {3});
  CHECK(kind_of([&] { scale_polytope(one, 0.5); }) == ErrorKind::kInvalidBeta);
  CHECK(kind_of([&] { scale_polytope(one, std::nan("")); }) == ErrorKind::kInvalidBeta);
  CHECK(kind_of([&] {
          scale_polytope(one, std::numeric_limits<double>::infinity());
        }) == ErrorKind::kInvalidBeta);
}

TEST_CASE("point decomposition setup") {
  const std::vector<double> x{.5, 0, 1.5};
  const auto pd = setup_point_decomposition(x);
  CHECK(pd.polytope.a == DenseMatrix::identity(3));
  CHECK(pd.polytope.b == x);
  CHECK(pd.cost == x);
  CHECK(pd.x_star == x);
  CHECK(kind_of([] { setup_point_decomposition(std::vector{1.0, -0.5}); }) ==
        ErrorKind::kNegativeInput);
}

TEST_CASE("decomposing the zero point") {
  const auto inst = testing::example_instance();
  const ExactDpOracle dp(inst);
  const PackingWrap oracle(dp);
  const std::vector<double> x(12, 0.0);
  const auto pd = setup_point_decomposition(x);
  const DwResult r = solve_dw(pd.polytope, oracle, pd.cost);
  REQUIRE(r.combination.points.size() == 1);
  CHECK(r.combination.points[0].is_zero());
  CHECK(r.combination.weights[0] == 1.0);
  CHECK(reconstruction_error(r.combination, x) == 0.0);
}

TEST_CASE("decomposing the auction example optimum") {
  const auto inst = testing::example_instance();
  const ExactDpOracle dp(inst);
  const PackingWrap oracle(dp);
  std::vector<double> x(12, 0.0);
  x[inst.variable(0, 1)] = .5;
  x[inst.variable(1, 2)] = .25;
  x[inst.variable(1, 4)] = .25;
  const auto pd = setup_point_decomposition(x);
  const DwResult r = solve_dw(pd.polytope, oracle, pd.cost);
  CHECK(reconstruction_error(r.combination, x) <= 1e-8);
  CHECK(r.combination.support() <= 4);
  CHECK(r.combination.weight_sum() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decomposing halved relaxation vertices") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = generate_capped_instance(1 + seed % 4, 1 + seed % 6, seed, 10);
    const AuctionLp lp = build_lp(inst);
    auto x = solve_lp_reference(lp.a, lp.b, lp.c).x;
    for (double& v : x) v /= 2.0;
    std::size_t s = 0;
    for (double v : x) s += v > 0.0 ? 1 : 0;

    const ExactDpOracle dp(inst);
    const PackingWrap oracle(dp);
    const auto pd = setup_point_decomposition(x);
    const DwResult r = solve_dw(pd.polytope, oracle, pd.cost);
    CAPTURE(seed);
    CHECK(reconstruction_error(r.combination, x) <= 1e-8);
    CHECK(r.combination.support() <= s + 1);
  }
}

TEST_CASE("reconstruction error") {
  ConvexCombination combo;
  combo.points = {IntegerPoint{1, 0}, IntegerPoint{0, 1}};
  combo.weights = {.5, .5};
  finalize_combination(combo, 2, std::vector{1.0, 1.0});
  CHECK(reconstruction_error(combo, std::vector{.5, .5}) == 0.0);
  CHECK(reconstruction_error(combo, std::vector{.5, .75}) == Approx(.25));
}

TEST_CASE("enumeration oracle matches lattice brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const std::size_t m = 1 + seed % 3;
    const Polytope p(testing::random_bounded_matrix(m, n, seed, 3),
                     testing::random_vector(m, seed + 1, 0, 6));
    const auto c = testing::random_vector(n, seed + 2, 0, 9);
    const EnumerationOracle oracle(p);
    const IntegerPoint x = oracle.best_point(c);
    CHECK(p.contains(x.as_real(), 1e-9));

    // Every lattice point in the box [0, 6]^n.
    double best = 0.0;
    std::vector<double> y(n, 0.0);
    while (true) {
      if (p.contains(y, 1e-9)) best = std::max(best, dot(c, y));
      std::size_t j = 0;
      while (j < n && y[j] == 6.0) y[j++] = 0.0;
      if (j == n) break;
      y[j] += 1.0;
    }
    CAPTURE(seed);
    CHECK(x.dot(c) == Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("coordinate greedy oracle returns lattice points of the polytope") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const std::size_t m = 1 + seed % 3;
    const Polytope p(testing::random_bounded_matrix(m, n, seed, 3),
                     testing::random_vector(m, seed + 1, 0, 6));
    const CoordinateGreedyOracle oracle(p);
    const IntegerPoint x = oracle.best_point(testing::random_vector(n, seed + 2, 0, 9));
    CHECK(p.contains(x.as_real(), 1e-9));
  }
}

TEST_CASE("raw polytope oracles validate their input") {
  CHECK(kind_of([] { EnumerationOracle(Polytope(DenseMatrix{{1, -1}}, {1})); }) ==
        ErrorKind::kNegativeInput);
  CHECK(kind_of([] { EnumerationOracle(Polytope(DenseMatrix{{1, 0}}, {1})); }) ==
        ErrorKind::kUnbounded);
  const EnumerationOracle ok(Polytope(DenseMatrix{{1, 1}}, {2}));
  CHECK(kind_of([&] { ok.best_point(std::vector{1.0, -1.0}); }) ==
        ErrorKind::kNegativeInput);
  CHECK(ok.best_point(std::vector{0.0, 0.0}).is_zero());
}

}  // namespace
}  // namespace dwd
