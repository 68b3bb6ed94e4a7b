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

#include "dwd/dw_solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "dwd/errors.hpp"

namespace dwd {

MasterState init_master(const Polytope& polytope) {
  polytope.validate();
  const std::size_t m = polytope.rows();
  MasterState s;
  s.basis_inverse = DenseMatrix::identity(m + 1);
  s.rhs = polytope.b;
  s.rhs.push_back(1.0);
  s.dual_row.assign(m + 1, 0.0);
  s.objective = 0.0;
  for (std::size_t i = 0; i < m; ++i) s.labels.push_back(BasisLabel::slack(i));
  s.labels.push_back(BasisLabel::point(0));
  return s;
}

DwRun start_run(const Polytope& polytope) {
  DwRun run;
  run.state = init_master(polytope);
  run.points.emplace(0, IntegerPoint::zero(polytope.dimension()));
  return run;
}

std::vector<double> pricing_cost(const MasterState& state,
                                 std::span<const double> c,
                                 const DenseMatrix& a) {
  if (c.size() != a.cols() || a.rows() != state.linking_rows()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "pricing dimensions");
  }
  std::vector<double> cost = a.left_multiply(state.w());
  for (std::size_t j = 0; j < cost.size(); ++j) cost[j] += c[j];
  return cost;
}

double price(const MasterState& state, std::span<const double> c,
             const DenseMatrix& a, const IntegerPoint& x) {
  return x.dot(pricing_cost(state, c, a)) + state.alpha();
}

namespace {

// Columns of [A | I; 1^T | 0^T] selected by the current basis labels, with
// their minimization-form costs.
void basis_columns(const DwRun& run, const Polytope& polytope,
                   std::span<const double> c, DenseMatrix& columns,
                   std::vector<double>& costs) {
  const std::size_t m = polytope.rows();
  columns = DenseMatrix(m + 1, m + 1);
  costs.assign(m + 1, 0.0);
  for (std::size_t t = 0; t <= m; ++t) {
    const BasisLabel label = run.state.labels[t];
    if (label.is_slack()) {
      columns(label.index(), t) = 1.0;
      continue;
    }
    const auto it = run.points.find(label.index());
    if (!label.is_point() || it == run.points.end()) {
      throw SolverError(ErrorKind::kInternal, "basis label without a column");
    }
    const auto ax = polytope.a.multiply(it->second.as_real());
    for (std::size_t i = 0; i < m; ++i) columns(i, t) = ax[i];
    columns(m, t) = 1.0;
    costs[t] = -it->second.dot(c);
  }
}

void maybe_refactor(DwRun& run, const Polytope& polytope,
                    std::span<const double> c, const DwOptions& options) {
  if (options.refactor_interval == 0 || run.pivots % options.refactor_interval != 0) {
    return;
  }
  DenseMatrix columns;
  std::vector<double> costs;
  basis_columns(run, polytope, c, columns, costs);
  if (reconstruction_error(run.state, columns) <= options.refactor_threshold) return;
  std::vector<double> full_rhs = polytope.b;
  full_rhs.push_back(1.0);
  refactor(run.state, columns, costs, full_rhs);
}

std::optional<std::size_t> profitable_slack(const MasterState& state, double tol) {
  std::vector<bool> basic(state.linking_rows(), false);
  for (const BasisLabel& label : state.labels) {
    if (label.is_slack()) basic[label.index()] = true;
  }
  const auto w = state.w();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!basic[i] && w[i] > tol) return i;
  }
  return std::nullopt;
}

void price_slacks(DwRun& run, const Polytope& polytope, std::span<const double> c,
                  const DwOptions& options) {
  for (std::size_t count = 0;; ++count) {
    const auto slack = profitable_slack(run.state, options.tol.optimality);
    if (!slack) return;
    if (count >= options.max_iterations) {
      throw SolverError(ErrorKind::kMaxIterationsExceeded, "too many slack pivots");
    }
    const double reduced_cost = run.state.w()[*slack];
    const auto column = run.state.basis_inverse.column(*slack);
    const auto r = ratio_test(run.state.rhs, column, options.tol.pivot);
    if (!r) throw SolverError(ErrorKind::kInternal, "slack column is unbounded");

    SlackPivotEvent event;
    const bool tracing = static_cast<bool>(options.on_slack_pivot);
    if (tracing) {
      event.iteration = run.iterations;
      event.slack = *slack;
      event.reduced_cost = reduced_cost;
      event.entering_column = column;
      event.leaving_row = *r;
      event.before = run.state;
    }
    const BasisLabel leaving = run.state.labels[*r];
    pivot_in_place(run.state, column, reduced_cost, *r, BasisLabel::slack(*slack),
                   options.tol.feasibility);
    if (leaving.is_point()) run.points.erase(leaving.index());
    ++run.pivots;
    maybe_refactor(run, polytope, c, options);
    if (tracing) {
      event.leaving_label = leaving;
      event.after = run.state;
      options.on_slack_pivot(event);
    }
  }
}

}  // namespace

IterationOutcome iterate(DwRun& run, const Polytope& polytope,
                         const Oracle& oracle, std::span<const double> c,
                         const DwOptions& options) {
  if (run.iterations >= options.max_iterations) {
    throw SolverError(ErrorKind::kMaxIterationsExceeded,
                      "no optimality certificate after " +
                          std::to_string(run.iterations) + " oracle calls");
  }
  ++run.iterations;
  price_slacks(run, polytope, c, options);

  const auto cost = pricing_cost(run.state, c, polytope.a);
  IntegerPoint x = oracle.best_point(cost);
  if (x.size() != polytope.dimension()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "oracle returned a point of wrong size");
  }
  const double reduced_cost = x.dot(cost) + run.state.alpha();

  DwIterationEvent event;
  const bool tracing = static_cast<bool>(options.on_iteration);
  if (tracing) {
    event.iteration = run.iterations;
    event.w.assign(run.state.w().begin(), run.state.w().end());
    event.alpha = run.state.alpha();
    event.cost = cost;
    event.point = x;
    event.reduced_cost = reduced_cost;
    event.before = run.state;
  }

  if (reduced_cost <= options.tol.optimality) {
    if (tracing) {
      event.optimal = true;
      event.value = run.state.value();
      options.on_iteration(event);
    }
    return IterationOutcome::kOptimal;
  }

  const auto ax = polytope.a.multiply(x.as_real());
  const auto column = entering_column(run.state, ax);
  const auto r = ratio_test(run.state.rhs, column, options.tol.pivot);
  if (!r) {
    throw SolverError(ErrorKind::kInternal,
                      "master LP unbounded; the convexity row should prevent this");
  }

  if (std::find(run.generated.begin(), run.generated.end(), x) != run.generated.end()) {
    std::string msg = "oracle returned a previously generated point again with reduced cost " +
                      std::to_string(reduced_cost);
    if (options.on_warning) options.on_warning(msg);
    run.warnings.push_back(std::move(msg));
  } else {
    run.generated.push_back(x);
  }

  const BasisLabel leaving = run.state.labels[*r];
  const BasisLabel entering = BasisLabel::point(run.next_label++);
  pivot_in_place(run.state, column, reduced_cost, *r, entering,
                 options.tol.feasibility);
  if (leaving.is_point()) run.points.erase(leaving.index());
  run.points.emplace(entering.index(), std::move(x));
  ++run.pivots;
  maybe_refactor(run, polytope, c, options);

  if (tracing) {
    event.ax = ax;
    event.entering_column = column;
    event.leaving_row = *r;
    event.leaving_label = leaving;
    event.entering_label = entering;
    event.after = run.state;
    event.value = run.state.value();
    options.on_iteration(event);
  }
  return IterationOutcome::kImproved;
}

ConvexCombination extract_decomposition(
    const MasterState& state, const std::map<std::size_t, IntegerPoint>& points,
    std::span<const double> c) {
  std::vector<std::pair<std::size_t, double>> basic;
  for (std::size_t t = 0; t < state.rows(); ++t) {
    const BasisLabel label = state.labels[t];
    if (!label.is_point()) continue;
    basic.emplace_back(label.index(), std::max(state.rhs[t], 0.0));
  }
  std::sort(basic.begin(), basic.end());

  ConvexCombination combo;
  std::size_t dimension = c.size();
  for (const auto& [label, weight] : basic) {
    const auto it = points.find(label);
    if (it == points.end()) {
      throw SolverError(ErrorKind::kInternal,
                        "no point recorded for lambda" + std::to_string(label));
    }
    if (weight <= 0.0) continue;
    combo.points.push_back(it->second);
    combo.weights.push_back(weight);
  }
  finalize_combination(combo, dimension, c);
  return combo;
}

DwResult solve_dw(const Polytope& polytope, const Oracle& oracle,
                  std::span<const double> c, const DwOptions& options) {
  polytope.validate();
  if (c.size() != polytope.dimension() || oracle.dimension() != polytope.dimension()) {
    throw SolverError(ErrorKind::kDimensionMismatch,
                      "cost vector, oracle and polytope dimensions differ");
  }
  for (double v : c) {
    if (!std::isfinite(v)) throw SolverError(ErrorKind::kNonFinite, "cost is not finite");
    if (v < 0.0) throw SolverError(ErrorKind::kNegativeInput, "cost vector must be >= 0");
  }

  DwRun run = start_run(polytope);
  while (iterate(run, polytope, oracle, c, options) == IterationOutcome::kImproved) {
  }

  DwResult result;
  result.combination = extract_decomposition(run.state, run.points, c);
  result.final_state = std::move(run.state);
  result.iterations = run.iterations;
  result.pivots = run.pivots;
  result.warnings = std::move(run.warnings);
  return result;
}

}  // namespace dwd
