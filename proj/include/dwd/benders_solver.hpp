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

// Benders row generation, the dual view of the integer Dantzig-Wolfe master.
// The master is
//   max z  s.t.  z <= w b - (c + w A) X_j  for every generated X_j,  w <= 0,
// and the oracle supplies the most violated cut. z is the negated LP value.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dwd/polytope.hpp"
#include "dwd/simplex.hpp"

namespace dwd {

// Integer points with set semantics; starts with the zero point.
class CutSet {
 public:
  explicit CutSet(std::size_t dimension);

  // Returns false (and ignores the point) when it is already present.
  bool add(IntegerPoint point);
  bool contains(const IntegerPoint& point) const;

  std::size_t size() const { return points_.size(); }
  std::span<const IntegerPoint> points() const { return points_; }

 private:
  std::vector<IntegerPoint> points_;
};

struct BendersSolution {
  double z = 0.0;
  std::vector<double> w;  // <= 0
  double value = 0.0;     // -z, maximization form
};

// Right-hand side of cut j at (w): w b - (c + w A) X_j.
double cut_bound(const IntegerPoint& point, std::span<const double> w,
                 const Polytope& polytope, std::span<const double> c);

BendersSolution solve_master(const CutSet& cuts, const Polytope& polytope,
                             std::span<const double> c,
                             const Tolerances& tol = {});

std::optional<IntegerPoint> find_violated_cut(const BendersSolution& sol,
                                              const Oracle& oracle,
                                              const Polytope& polytope,
                                              std::span<const double> c,
                                              double tol);

// The DW master restricted to `points` (which must include the zero point).
ConvexCombination restricted_primal(std::span<const IntegerPoint> points,
                                    const Polytope& polytope,
                                    std::span<const double> c,
                                    const Tolerances& tol = {});

struct BendersRoundEvent {
  std::size_t round = 0;
  double z = 0.0;
  std::vector<double> w;
  IntegerPoint point;
  double slack = 0.0;  // cut_bound(point) - z; negative means violated
  bool added = false;
};

struct BendersOptions {
  Tolerances tol;
  std::size_t max_rounds = 10000;
  std::function<void(const BendersRoundEvent&)> on_round;
};

struct BendersResult {
  BendersSolution solution;
  ConvexCombination combination;
  std::size_t rounds = 0;
  std::vector<IntegerPoint> cuts;
};

// c >= 0, b >= 0. Throws SolverError with kInfeasibleStart,
// kNegativeInput or kMaxIterationsExceeded.
BendersResult solve_benders(const Polytope& polytope, const Oracle& oracle,
                            std::span<const double> c,
                            const BendersOptions& options = {});

}  // namespace dwd
