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

// Solving many independent instances at once. Each instance is a serial
// solve; the OpenMP path distributes instances over threads and must produce
// exactly the serial results.

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dwd/auctions.hpp"
#include "dwd/benders_solver.hpp"
#include "dwd/dw_solver.hpp"
#include "dwd/polytope.hpp"

namespace dwd {

enum class Execution { kSerial, kParallel };

struct BatchProblem {
  Polytope polytope;
  std::vector<double> c;
  std::shared_ptr<const Oracle> oracle;  // must accept arbitrary-sign costs
};

enum class AuctionOracleKind { kExactDp, kGreedy };

// MU-P scaled by 1/beta with a packing-wrapped winner determination oracle.
BatchProblem make_auction_problem(const AuctionInstance& instance, double beta,
                                  AuctionOracleKind kind = AuctionOracleKind::kExactDp);

// The first exception thrown by any instance is rethrown after the loop.
// Iteration and warning callbacks are ignored on the parallel path.
std::vector<DwResult> solve_dw_batch(std::span<const BatchProblem> problems,
                                     Execution execution,
                                     const DwOptions& options = {});

std::vector<BendersResult> solve_benders_batch(std::span<const BatchProblem> problems,
                                               Execution execution,
                                               const BendersOptions& options = {});

// Reference LP values max{c x : x in P} for every problem.
std::vector<double> reference_values(std::span<const BatchProblem> problems,
                                     Execution execution);

}  // namespace dwd
