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

#include "dwd/benders_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dwd/errors.hpp"

namespace dwd {

CutSet::CutSet(std::size_t dimension) {
  points_.push_back(IntegerPoint::zero(dimension));
}

bool CutSet::add(IntegerPoint point) {
  if (!points_.empty() && point.size() != points_.front().size()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "cut point dimension");
  }
  if (contains(point)) return false;
  points_.push_back(std::move(point));
  return true;
}

bool CutSet::contains(const IntegerPoint& point) const {
  return std::find(points_.begin(), points_.end(), point) != points_.end();
}

double cut_bound(const IntegerPoint& point, std::span<const double> w,
                 const Polytope& polytope, std::span<const double> c) {
  std::vector<double> cost = polytope.a.left_multiply(w);
  for (std::size_t j = 0; j < cost.size(); ++j) cost[j] += c[j];
  return dot(w, polytope.b) - point.dot(cost);
}

// Standard form used for the master: variables (z+, z-, v) >= 0 with z =
// z+ - z- and w = -v. Cut j becomes
//   z+ - z- + sum_i v_i (b_i - (A X_j)_i) <= -c X_j,
// which generally has a negative right-hand side, so the reference solver
// runs its phase one.
BendersSolution solve_master(const CutSet& cuts, const Polytope& polytope,
                             std::span<const double> c, const Tolerances& tol) {
  const std::size_t m = polytope.rows();
  const std::size_t k = cuts.size();
  if (k == 0) {
    throw SolverError(ErrorKind::kUnbounded, "Benders master needs at least one cut");
  }
  DenseMatrix a(k, m + 2);
  std::vector<double> rhs(k);
  for (std::size_t j = 0; j < k; ++j) {
    const IntegerPoint& x = cuts.points()[j];
    const auto ax = polytope.a.multiply(x.as_real());
    a(j, 0) = 1.0;
    a(j, 1) = -1.0;
    for (std::size_t i = 0; i < m; ++i) a(j, 2 + i) = polytope.b[i] - ax[i];
    rhs[j] = -x.dot(c);
  }
  std::vector<double> objective(m + 2, 0.0);
  objective[0] = 1.0;
  objective[1] = -1.0;

  const LpSolution lp = solve_lp_reference(a, rhs, objective, tol);
  BendersSolution sol;
  sol.z = lp.x[0] - lp.x[1];
  sol.w.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.w[i] = lp.x[2 + i] == 0.0 ? 0.0 : -lp.x[2 + i];
  sol.value = -sol.z;
  return sol;
}

std::optional<IntegerPoint> find_violated_cut(const BendersSolution& sol,
                                              const Oracle& oracle,
                                              const Polytope& polytope,
                                              std::span<const double> c,
                                              double tol) {
  std::vector<double> cost = polytope.a.left_multiply(sol.w);
  for (std::size_t j = 0; j < cost.size(); ++j) cost[j] += c[j];
  IntegerPoint x = oracle.best_point(cost);
  const double bound = dot(sol.w, polytope.b) - x.dot(cost);
  if (sol.z > bound + tol) return x;
  return std::nullopt;
}

ConvexCombination restricted_primal(std::span<const IntegerPoint> points,
                                    const Polytope& polytope,
                                    std::span<const double> c,
                                    const Tolerances& tol) {
  const std::size_t n = polytope.dimension();
  const std::size_t m = polytope.rows();
  const auto zero = std::find_if(points.begin(), points.end(),
                                 [](const IntegerPoint& p) { return p.is_zero(); });
  if (zero == points.end()) {
    throw SolverError(ErrorKind::kInfeasible,
                      "restricted primal needs the zero point among its columns");
  }

  // lambda_0 is the slack of the convexity row sum_j lambda_j <= 1.
  std::vector<const IntegerPoint*> columns;
  for (const auto& p : points) {
    if (p.size() != n) throw SolverError(ErrorKind::kDimensionMismatch, "point dimension");
    if (p.is_zero()) continue;
    const bool seen = std::any_of(columns.begin(), columns.end(),
                                  [&](const IntegerPoint* q) { return *q == p; });
    if (!seen) columns.push_back(&p);
  }

  ConvexCombination combo;
  std::vector<double> lambda;
  if (!columns.empty()) {
    DenseMatrix a(m + 1, columns.size());
    std::vector<double> obj(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto ax = polytope.a.multiply(columns[j]->as_real());
      for (std::size_t i = 0; i < m; ++i) a(i, j) = ax[i];
      a(m, j) = 1.0;
      obj[j] = columns[j]->dot(c);
    }
    std::vector<double> rhs = polytope.b;
    rhs.push_back(1.0);
    lambda = solve_lp_reference(a, rhs, obj, tol).x;
  }

  double used = 0.0;
  for (double l : lambda) used += l;
  const double lambda_zero = std::max(1.0 - used, 0.0);
  if (lambda_zero > 0.0) {
    combo.points.push_back(*zero);
    combo.weights.push_back(lambda_zero);
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (lambda[j] <= 0.0) continue;
    combo.points.push_back(*columns[j]);
    combo.weights.push_back(lambda[j]);
  }
  finalize_combination(combo, n, c);
  return combo;
}

BendersResult solve_benders(const Polytope& polytope, const Oracle& oracle,
                            std::span<const double> c,
                            const BendersOptions& options) {
  polytope.validate();
  if (c.size() != polytope.dimension() || oracle.dimension() != polytope.dimension()) {
    throw SolverError(ErrorKind::kDimensionMismatch,
                      "cost vector, oracle and polytope dimensions differ");
  }
  for (double v : c) {
    if (!std::isfinite(v)) throw SolverError(ErrorKind::kNonFinite, "cost is not finite");
    if (v < 0.0) throw SolverError(ErrorKind::kNegativeInput, "cost vector must be >= 0");
  }

  CutSet cuts(polytope.dimension());
  BendersResult result;
  while (true) {
    if (result.rounds >= options.max_rounds) {
      throw SolverError(ErrorKind::kMaxIterationsExceeded,
                        "Benders did not converge in " +
                            std::to_string(result.rounds) + " rounds");
    }
    ++result.rounds;
    result.solution = solve_master(cuts, polytope, c, options.tol);

    std::vector<double> cost = polytope.a.left_multiply(result.solution.w);
    for (std::size_t j = 0; j < cost.size(); ++j) cost[j] += c[j];
    IntegerPoint x = oracle.best_point(cost);
    const double slack =
        dot(result.solution.w, polytope.b) - x.dot(cost) - result.solution.z;
    const bool violated = slack < -options.tol.optimality;

    BendersRoundEvent event;
    if (options.on_round) {
      event.round = result.rounds;
      event.z = result.solution.z;
      event.w = result.solution.w;
      event.point = x;
      event.slack = slack;
    }
    // A violated cut that is already present can only come from LP round-off;
    // the master enforces every cut it holds, so treat it as converged.
    const bool added = violated && cuts.add(std::move(x));
    if (options.on_round) {
      event.added = added;
      options.on_round(event);
    }
    if (!added) break;
  }

  result.cuts.assign(cuts.points().begin(), cuts.points().end());
  result.combination = restricted_primal(result.cuts, polytope, c, options.tol);
  const double gap = std::abs(result.combination.objective - result.solution.value);
  if (gap > 1e-6 * (1.0 + std::abs(result.solution.value))) {
    throw SolverError(ErrorKind::kInternal,
                      "restricted primal value differs from the Benders bound by " +
                          std::to_string(gap));
  }
  return result;
}

}  // namespace dwd
