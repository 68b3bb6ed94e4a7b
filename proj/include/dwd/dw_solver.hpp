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

// Integer Dantzig-Wolfe decomposition. The master LP is over convex weights
// of integer points plus slacks for A x <= b; new columns come from an
// integer oracle priced with the current duals. When the oracle's best point
// no longer has positive reduced cost the basis holds both the LP optimum and
// an exact convex decomposition of it.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwd/polytope.hpp"
#include "dwd/simplex.hpp"

namespace dwd {

// One loop of the solver as seen by trace renderers.
struct DwIterationEvent {
  std::size_t iteration = 0;   // 1-based oracle call count
  std::vector<double> w;
  double alpha = 0.0;
  std::vector<double> cost;    // c + wA passed to the oracle
  IntegerPoint point;
  double reduced_cost = 0.0;
  bool optimal = false;        // no pivot happened; the run ends here
  MasterState before;          // tableau the duals were read from
  // Populated only when a pivot happened.
  std::vector<double> ax;
  std::vector<double> entering_column;
  std::optional<std::size_t> leaving_row;
  std::optional<BasisLabel> leaving_label;
  std::optional<BasisLabel> entering_label;
  std::optional<MasterState> after;
  double value = 0.0;          // master value after this iteration
};

// A slack that left the basis re-entering because w_i > 0. The oracle only
// prices points, so slack columns are priced by the solver itself.
struct SlackPivotEvent {
  std::size_t iteration = 0;   // oracle call this pivot precedes
  std::size_t slack = 0;       // 0-based row of A
  double reduced_cost = 0.0;   // w_i
  std::vector<double> entering_column;
  std::size_t leaving_row = 0;
  BasisLabel leaving_label = BasisLabel::artificial();
  MasterState before;
  MasterState after;
};

struct DwOptions {
  Tolerances tol;
  std::size_t max_iterations = 10000;
  // Check B^-1 against the original columns every this many pivots and
  // refactor when drift exceeds refactor_threshold. 0 disables the check.
  std::size_t refactor_interval = 50;
  double refactor_threshold = 1e-7;
  std::function<void(const DwIterationEvent&)> on_iteration;
  std::function<void(const SlackPivotEvent&)> on_slack_pivot;
  std::function<void(const std::string&)> on_warning;
};

// Basis plus the integer points currently basic, keyed by label index.
// Label Point(0) is always the zero point.
struct DwRun {
  MasterState state;
  std::map<std::size_t, IntegerPoint> points;  // basic points only
  std::vector<IntegerPoint> generated;         // every point that entered
  std::size_t next_label = 1;
  std::size_t iterations = 0;
  std::size_t pivots = 0;
  std::vector<std::string> warnings;
};

MasterState init_master(const Polytope& polytope);
DwRun start_run(const Polytope& polytope);

// (c + wA) X + alpha with the state's duals.
double price(const MasterState& state, std::span<const double> c,
             const DenseMatrix& a, const IntegerPoint& x);

// c + wA
std::vector<double> pricing_cost(const MasterState& state,
                                 std::span<const double> c,
                                 const DenseMatrix& a);

enum class IterationOutcome { kOptimal, kImproved };

IterationOutcome iterate(DwRun& run, const Polytope& polytope,
                         const Oracle& oracle, std::span<const double> c,
                         const DwOptions& options = {});

ConvexCombination extract_decomposition(
    const MasterState& state, const std::map<std::size_t, IntegerPoint>& points,
    std::span<const double> c);

struct DwResult {
  ConvexCombination combination;
  MasterState final_state;
  std::size_t iterations = 0;  // oracle calls, including the final one
  std::size_t pivots = 0;
  std::vector<std::string> warnings;
};

// c >= 0, b >= 0. Throws SolverError with kInfeasibleStart,
// kNegativeInput or kMaxIterationsExceeded.
DwResult solve_dw(const Polytope& polytope, const Oracle& oracle,
                  std::span<const double> c, const DwOptions& options = {});

}  // namespace dwd
