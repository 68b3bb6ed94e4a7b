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

#include "dwd/batch.hpp"

#include <exception>
#include <utility>

#include "dwd/oracles.hpp"
#include "dwd/simplex.hpp"

namespace dwd {

BatchProblem make_auction_problem(const AuctionInstance& instance, double beta,
                                  AuctionOracleKind kind) {
  const AuctionLp lp = build_lp(instance);
  std::shared_ptr<const Oracle> inner;
  if (kind == AuctionOracleKind::kExactDp) {
    inner = std::make_shared<ExactDpOracle>(instance);
  } else {
    inner = std::make_shared<GreedyOracle>(instance);
  }
  return {scale_polytope(lp.polytope(), beta), lp.c, make_packing_oracle(std::move(inner))};
}

namespace {

template <typename Result, typename Solve>
std::vector<Result> run_batch(std::span<const BatchProblem> problems,
                              Execution execution, Solve solve) {
  std::vector<Result> results(problems.size());
  std::vector<std::exception_ptr> errors(problems.size());
  const auto count = static_cast<std::ptrdiff_t>(problems.size());
  const bool parallel = execution == Execution::kParallel;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      results[i] = solve(problems[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

std::vector<DwResult> solve_dw_batch(std::span<const BatchProblem> problems,
                                     Execution execution, const DwOptions& options) {
  DwOptions opts = options;
  if (execution == Execution::kParallel) {
    opts.on_iteration = nullptr;
    opts.on_slack_pivot = nullptr;
    opts.on_warning = nullptr;
  }
  return run_batch<DwResult>(problems, execution, [&](const BatchProblem& p) {
    return solve_dw(p.polytope, *p.oracle, p.c, opts);
  });
}

std::vector<BendersResult> solve_benders_batch(std::span<const BatchProblem> problems,
                                               Execution execution,
                                               const BendersOptions& options) {
  BendersOptions opts = options;
  if (execution == Execution::kParallel) opts.on_round = nullptr;
  return run_batch<BendersResult>(problems, execution, [&](const BatchProblem& p) {
    return solve_benders(p.polytope, *p.oracle, p.c, opts);
  });
}

std::vector<double> reference_values(std::span<const BatchProblem> problems,
                                     Execution execution) {
  return run_batch<double>(problems, execution, [](const BatchProblem& p) {
    return solve_lp_reference(p.polytope.a, p.polytope.b, p.c).value;
  });
}

}  // namespace dwd
