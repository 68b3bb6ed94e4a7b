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

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dwd/polytope.hpp"

namespace dwd {

// Lifts an oracle that is only correct for nonnegative costs to arbitrary
// costs, assuming Q is a packing polytope: solve with max(c, 0), then zero
// every coordinate whose cost is negative. The inner oracle must outlive
// the wrapper.
class PackingWrap final : public Oracle {
 public:
  explicit PackingWrap(const Oracle& inner) : inner_(&inner) {}

  std::size_t dimension() const override { return inner_->dimension(); }
  IntegerPoint best_point(std::span<const double> cost) const override;

 private:
  const Oracle* inner_;
};

// Same as PackingWrap but shares ownership of the inner oracle.
std::shared_ptr<const Oracle> make_packing_oracle(std::shared_ptr<const Oracle> inner);

struct ScaledPolytope {
  Polytope base;
  double beta = 1.0;

  // (A, b / beta)
  Polytope effective() const;
};

// Throws SolverError(kInvalidBeta) unless beta >= 1.
Polytope scale_polytope(const Polytope& p, double beta);

// Decomposing a given x* reduces to maximizing x*.x over { x <= x*, x >= 0 }.
struct PointDecompositionProblem {
  std::vector<double> x_star;
  Polytope polytope;          // A = I, b = x*
  std::vector<double> cost;   // x*
};

// Throws SolverError(kNegativeInput) if any coordinate is negative.
PointDecompositionProblem setup_point_decomposition(
    std::span<const double> x_star);

// max |combined - x*|
double reconstruction_error(const ConvexCombination& combo,
                            std::span<const double> x_star);

// Exact integer maximization over the lattice points of { A x <= b, x >= 0 }
// by depth-first enumeration. A must be nonnegative and every column must
// have a positive entry so the search is finite. Meant for small raw
// polytopes; auctions have a dedicated DP.
class EnumerationOracle final : public Oracle {
 public:
  explicit EnumerationOracle(Polytope integral_hull);

  std::size_t dimension() const override { return polytope_.dimension(); }
  IntegerPoint best_point(std::span<const double> cost) const override;

 private:
  Polytope polytope_;
  std::vector<std::int64_t> upper_;
};

// Walks coordinates by decreasing cost and raises each to the largest
// integer that keeps A x <= b. No approximation guarantee in general.
class CoordinateGreedyOracle final : public Oracle {
 public:
  explicit CoordinateGreedyOracle(Polytope integral_hull);

  std::size_t dimension() const override { return polytope_.dimension(); }
  IntegerPoint best_point(std::span<const double> cost) const override;

 private:
  Polytope polytope_;
};

}  // namespace dwd
