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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dwd/auctions.hpp"
#include "dwd/batch.hpp"
#include "dwd/benders_solver.hpp"
#include "dwd/dw_solver.hpp"
#include "dwd/oracles.hpp"
#include "dwd/simplex.hpp"
#include "support/brute_force.hpp"

namespace {

using namespace dwd;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Auction corpus shared by criteria 2 to 4.
std::vector<AuctionInstance> auction_corpus(std::size_t count, std::uint64_t base) {
  std::vector<AuctionInstance> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t seed = base + k;
    out.push_back(generate_capped_instance(1 + seed % 5, 1 + (seed / 5) % 8, seed, 10));
  }
  return out;
}

IntegerPoint assignment(const AuctionInstance& inst,
                        std::initializer_list<std::pair<int, int>> pairs) {
  IntegerPoint x(inst.variable_count());
  for (auto [player, quantity] : pairs) {
    x.set(inst.variable(static_cast<std::size_t>(player - 1),
                        static_cast<std::size_t>(quantity)),
          1);
  }
  return x;
}

void golden_trace(Verdict& v) {
  const auto start = Clock::now();
  const AuctionInstance inst = testing::example_instance();
  const AuctionLp lp = build_lp(inst);
  const Polytope p = scale_polytope(lp.polytope(), 2.0);
  const ExactDpOracle dp(inst);
  const PackingWrap oracle(dp);

  std::vector<DwIterationEvent> events;
  DwOptions options;
  options.on_iteration = [&](const DwIterationEvent& e) { events.push_back(e); };
  const DwResult r = solve_dw(p, oracle, lp.c, options);
  const double elapsed = seconds_since(start);

  const std::vector<double> rc = {10, 6, 3, 0.5, 0};
  const std::vector<IntegerPoint> points = {
      assignment(inst, {{1, 1}, {2, 2}}), assignment(inst, {{2, 4}}),
      assignment(inst, {{1, 1}, {3, 2}}), assignment(inst, {{1, 1}})};
  const std::vector<std::string> leaving = {"s1", "s2", "s4", "lambda3"};

  v.expect(events.size() == 5 && r.iterations == 5, "five oracle calls");
  for (std::size_t k = 0; k < events.size() && k < 5; ++k) {
    v.expect(std::abs(events[k].reduced_cost - rc[k]) <= 1e-9, "reduced cost");
    if (k < 4) {
      v.expect(events[k].point == points[k], "generated point");
      v.expect(events[k].leaving_label && events[k].leaving_label->name() == leaving[k],
               "leaving variable");
    } else {
      v.expect(events[k].optimal, "optimal at the fifth call");
    }
  }

  const auto& combo = r.combination;
  const std::vector<IntegerPoint> support = {IntegerPoint::zero(12), points[0], points[1],
                                             points[3]};
  v.expect(combo.points == support, "decomposition points X0, X1, X2, X4");
  for (double w : combo.weights) v.expect(std::abs(w - 0.25) <= 1e-9, "weights 0.25");
  std::vector<double> x(12, 0.0);
  x[inst.variable(0, 1)] = 0.5;
  x[inst.variable(1, 2)] = 0.25;
  x[inst.variable(1, 4)] = 0.25;
  for (std::size_t j = 0; j < 12 && combo.combined_point.size() == 12; ++j) {
    v.expect(std::abs(combo.combined_point[j] - x[j]) <= 1e-9, "combined point");
  }
  v.expect(std::abs(combo.objective - 5.5) <= 1e-9, "objective 5.5");
  v.expect(elapsed < 0.1, "runtime under 0.1 s");
  v.detail << "5 oracle calls, objective " << combo.objective << ", " << elapsed * 1e3
           << " ms";
}

struct CorpusRun {
  std::vector<AuctionInstance> instances;
  std::vector<BatchProblem> problems;
  std::vector<DwResult> dw;
  std::vector<double> reference;
  double seconds = 0.0;
};

CorpusRun run_corpus() {
  CorpusRun c;
  const auto start = Clock::now();
  c.instances = auction_corpus(240, 1000);
  for (const auto& inst : c.instances) c.problems.push_back(make_auction_problem(inst, 2.0));
  c.dw = solve_dw_batch(c.problems, Execution::kParallel);
  c.reference = reference_values(c.problems, Execution::kParallel);
  c.seconds = seconds_since(start);
  return c;
}

void optimality(Verdict& v, const CorpusRun& c) {
  double worst = 0.0;
  for (std::size_t k = 0; k < c.problems.size(); ++k) {
    worst = std::max(worst, std::abs(c.dw[k].combination.objective - c.reference[k]));
  }
  v.expect(c.problems.size() >= 200, "at least 200 instances");
  v.expect(worst <= 1e-7, "objective within 1e-7 of the reference LP");
  v.expect(c.seconds < 10.0, "suite under 10 s");
  v.detail << c.problems.size() << " instances, max gap " << worst << ", " << c.seconds
           << " s";
}

void validity(Verdict& v, const CorpusRun& c) {
  std::size_t passed = 0;
  for (std::size_t k = 0; k < c.problems.size(); ++k) {
    const auto& combo = c.dw[k].combination;
    const Polytope& p = c.problems[k].polytope;
    bool ok = std::abs(combo.weight_sum() - 1.0) <= 1e-9;
    for (double w : combo.weights) ok = ok && w >= 0.0;
    const auto ax = p.a.multiply(combo.combined_point);
    for (std::size_t i = 0; i < ax.size(); ++i) ok = ok && ax[i] <= p.b[i] + 1e-8;
    ok = ok && combo.support() <= c.instances[k].players + 2;
    passed += ok ? 1 : 0;
  }
  v.expect(passed == c.problems.size(), "every decomposition valid");
  v.detail << passed << "/" << c.problems.size() << " decompositions valid";
}

void duality(Verdict& v, const CorpusRun& c) {
  const auto benders = solve_benders_batch(c.problems, Execution::kParallel);
  double worst_gap = 0.0;
  double worst_primal = 0.0;
  for (std::size_t k = 0; k < c.problems.size(); ++k) {
    const double value = benders[k].solution.value;
    worst_gap = std::max(worst_gap, std::abs(value - c.dw[k].combination.objective));
    const auto primal = restricted_primal(benders[k].cuts, c.problems[k].polytope,
                                          c.problems[k].c);
    worst_primal = std::max(worst_primal, std::abs(primal.objective - value));
  }
  v.expect(worst_gap <= 1e-7, "benders value equals dw value");
  v.expect(worst_primal <= 1e-7, "restricted primal attains the benders value");
  v.detail << c.problems.size() << " instances, max gap " << worst_gap
           << ", max restricted primal gap " << worst_primal;
}

void point_decomposition(Verdict& v) {
  double worst = 0.0;
  std::size_t bad_support = 0;
  const auto instances = auction_corpus(100, 5000);
  for (const auto& inst : instances) {
    const AuctionLp lp = build_lp(inst);
    auto x = solve_lp_reference(lp.a, lp.b, lp.c).x;
    std::size_t s = 0;
    for (double& xi : x) {
      xi /= 2.0;
      s += xi > 0.0 ? 1 : 0;
    }
    const ExactDpOracle dp(inst);
    const PackingWrap oracle(dp);
    const auto pd = setup_point_decomposition(x);
    const DwResult r = solve_dw(pd.polytope, oracle, pd.cost);
    worst = std::max(worst, reconstruction_error(r.combination, x));
    if (r.combination.support() > s + 1) ++bad_support;
  }
  v.expect(worst <= 1e-8, "reconstruction within 1e-8");
  v.expect(bad_support == 0, "support at most s+1");
  v.detail << instances.size() << " points, max error " << worst << ", " << bad_support
           << " support violations";
}

void greedy_guarantee(Verdict& v) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> d(0, 10);
  const auto instances = auction_corpus(500, 9000);
  std::size_t checks = 0;
  double worst = 1e300;
  for (const auto& inst : instances) {
    const AuctionLp lp = build_lp(inst);
    for (int k = 0; k < 5; ++k) {
      std::vector<double> c = lp.c;
      if (k > 0) {
        for (double& x : c) x = d(rng);
      }
      const double lp_value = solve_lp_reference(lp.a, lp.b, c).value;
      const double got = greedy_winner_determination(inst, c).dot(c);
      worst = std::min(worst, got - lp_value / 2);
      ++checks;
    }
  }
  v.expect(worst >= -1e-9, "greedy at least half the relaxation");
  v.detail << instances.size() << " instances, " << checks
           << " cost vectors, min(greedy - LP/2) " << worst;
}

void kernel_equivalence(Verdict& v) {
  std::size_t lp_cases = 0;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const std::uint64_t s = seed * 1000 + n * 10 + m + 7;
        const DenseMatrix a = testing::random_bounded_matrix(m, n, s);
        const auto b = testing::random_vector(m, s + 1, 0, 9);
        const auto c = testing::random_vector(n, s + 2, -3, 9);
        worst = std::max(worst, std::abs(solve_lp_reference(a, b, c).value -
                                         testing::brute_force_lp(a, b, c)));
        ++lp_cases;
      }
    }
  }
  std::size_t dp_cases = 0;
  std::size_t dp_mismatch = 0;
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> d(0, 10);
  for (std::size_t np = 1; np <= 3; ++np) {
    for (std::size_t mu = 1; mu <= 5; ++mu) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = generate_capped_instance(np, mu, seed * 17 + np * 5 + mu, 10);
        for (int k = 0; k < 5; ++k) {
          std::vector<double> c = inst.flat_valuations();
          if (k > 0) {
            for (double& x : c) x = d(rng);
          }
          const IntegerPoint x = exact_winner_determination(inst, c);
          if (!is_feasible_assignment(inst, x) ||
              x.dot(c) != testing::brute_force_assignment(inst, c)) {
            ++dp_mismatch;
          }
          ++dp_cases;
        }
      }
    }
  }
  v.expect(worst <= 1e-8, "reference LP equals vertex enumeration");
  v.expect(dp_mismatch == 0, "exact DP equals exhaustive enumeration");
  v.detail << lp_cases << " LPs (max gap " << worst << "), " << dp_cases
           << " DP cases (" << dp_mismatch << " mismatches)";
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& name, const std::function<void(Verdict&)>& fn) {
    Verdict v;
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail << "exception: " << e.what();
    }
    std::printf("%s criterion %d (%s): %s\n", v.ok ? "PASS" : "FAIL", id, name.c_str(),
                v.detail.str().c_str());
    failures += v.ok ? 0 : 1;
  };

  report(1, "golden auction trace", golden_trace);
  const CorpusRun corpus = run_corpus();
  report(2, "optimality", [&](Verdict& v) { optimality(v, corpus); });
  report(3, "decomposition validity", [&](Verdict& v) { validity(v, corpus); });
  report(4, "benders and dw agree", [&](Verdict& v) { duality(v, corpus); });
  report(5, "point decomposition", point_decomposition);
  report(6, "greedy guarantee", greedy_guarantee);
  report(7, "kernel oracle equivalence", kernel_equivalence);
  return failures == 0 ? 0 : 1;
}
