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

#include "dwd/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "dwd/errors.hpp"

namespace dwd {

std::string BasisLabel::name() const {
  switch (kind_) {
    case Kind::kSlack: return "s" + std::to_string(index_ + 1);
    case Kind::kPoint: return "lambda" + std::to_string(index_);
    case Kind::kArtificial: return "a";
  }
  return "?";
}

std::optional<std::size_t> ratio_test(std::span<const double> rhs,
                                      std::span<const double> entering_col,
                                      double tol) {
  if (rhs.size() != entering_col.size()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "ratio test vector sizes");
  }
  std::optional<std::size_t> best;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (entering_col[i] <= tol) continue;
    const double ratio = rhs[i] / entering_col[i];
    // Strict comparison keeps the smallest row index on ties.
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best = i;
    }
  }
  return best;
}

std::vector<double> entering_column(const MasterState& state,
                                    std::span<const double> ax) {
  if (ax.size() != state.linking_rows()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "entering column length");
  }
  std::vector<double> full(ax.begin(), ax.end());
  full.push_back(1.0);
  return state.basis_inverse.multiply(full);
}

namespace {

void check_pivot_args(const MasterState& state,
                      std::span<const double> entering_col, std::size_t r) {
  if (entering_col.size() != state.rows() || r >= state.rows()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "pivot arguments");
  }
  if (!(entering_col[r] != 0.0) || !std::isfinite(entering_col[r])) {
    throw SolverError(ErrorKind::kInternal, "pivot on a zero element");
  }
}

void scale_pivot_row(MasterState& state, double p, std::size_t r) {
  for (double& v : state.basis_inverse.row(r)) v /= p;
  state.rhs[r] /= p;
}

void finish_pivot(MasterState& state, double reduced_cost, std::size_t r,
                  BasisLabel entering, double feasibility_tol) {
  const auto pivot_row = state.basis_inverse.row(r);
  for (std::size_t c = 0; c < pivot_row.size(); ++c) {
    state.dual_row[c] -= reduced_cost * pivot_row[c];
  }
  state.objective -= reduced_cost * state.rhs[r];
  state.labels[r] = entering;
  for (double& v : state.rhs) {
    if (v < 0.0 && v >= -feasibility_tol) v = 0.0;
  }
}

}  // namespace

void pivot_in_place(MasterState& state, std::span<const double> entering_col,
                    double reduced_cost, std::size_t r, BasisLabel entering,
                    double feasibility_tol) {
  check_pivot_args(state, entering_col, r);
  scale_pivot_row(state, entering_col[r], r);

  const auto n = static_cast<std::ptrdiff_t>(state.rows());
  const std::size_t width = state.basis_inverse.cols();
  const double* pivot_row = state.basis_inverse.row(r).data();
  double* inverse = &state.basis_inverse(0, 0);
  double* rhs = state.rhs.data();
  const double pivot_rhs = rhs[r];

  auto eliminate = [&](std::size_t row) {
    if (row == r) return;
    const double f = entering_col[row];
    if (f == 0.0) return;
    double* dst = inverse + row * width;
    for (std::size_t c = 0; c < width; ++c) dst[c] -= f * pivot_row[c];
    rhs[row] -= f * pivot_rhs;
  };
  // Small tableaus skip the parallel region; entering it costs more than
  // the update itself.
  if (state.rows() < kParallelPivotRows) {
    for (std::size_t i = 0; i < state.rows(); ++i) eliminate(i);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) eliminate(static_cast<std::size_t>(i));
  }

  finish_pivot(state, reduced_cost, r, entering, feasibility_tol);
}

MasterState pivot(MasterState state, std::span<const double> entering_col,
                  double reduced_cost, std::size_t r, BasisLabel entering,
                  double feasibility_tol) {
  pivot_in_place(state, entering_col, reduced_cost, r, entering, feasibility_tol);
  return state;
}

namespace reference {

void pivot_in_place(MasterState& state, std::span<const double> entering_col,
                    double reduced_cost, std::size_t r, BasisLabel entering,
                    double feasibility_tol) {
  check_pivot_args(state, entering_col, r);
  scale_pivot_row(state, entering_col[r], r);
  for (std::size_t i = 0; i < state.rows(); ++i) {
    if (i == r) continue;
    const double f = entering_col[i];
    for (std::size_t c = 0; c < state.basis_inverse.cols(); ++c) {
      state.basis_inverse(i, c) -= f * state.basis_inverse(r, c);
    }
    state.rhs[i] -= f * state.rhs[r];
  }
  finish_pivot(state, reduced_cost, r, entering, feasibility_tol);
}

}  // namespace reference

double reconstruction_error(const MasterState& state,
                            const DenseMatrix& basis_columns) {
  const DenseMatrix product = state.basis_inverse.multiply(basis_columns);
  double err = 0.0;
  for (std::size_t i = 0; i < product.rows(); ++i) {
    for (std::size_t j = 0; j < product.cols(); ++j) {
      err = std::max(err, std::abs(product(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }
  return err;
}

void refactor(MasterState& state, const DenseMatrix& basis_columns,
              std::span<const double> basis_costs,
              std::span<const double> full_rhs) {
  state.basis_inverse = invert(basis_columns);
  state.rhs = state.basis_inverse.multiply(full_rhs);
  state.dual_row = state.basis_inverse.left_multiply(basis_costs);
  state.objective = dot(basis_costs, state.rhs);
}

namespace {

// Dense tableau for the reference solver. Columns are laid out as
// [structural | slack | artificial], the last column is the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t col) {
    const double p = at(r, col);
    for (std::size_t c = 0; c <= cols_; ++c) at(r, c) /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(i, c) -= f * at(r, c);
    }
    basis_[r] = col;
  }

  // Primal simplex maximizing obj over the allowed columns with Bland's
  // rule. Returns false if the problem is unbounded.
  bool maximize(std::span<const double> obj, const std::vector<bool>& allowed,
                const Tolerances& tol) {
    const std::size_t cap = 50000 + 100 * (rows_ + cols_) * (rows_ + cols_);
    for (std::size_t iter = 0; iter < cap; ++iter) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_ && !entering; ++j) {
        if (!allowed[j]) continue;
        double d = obj[j];
        for (std::size_t i = 0; i < rows_; ++i) d -= obj[basis_[i]] * at(i, j);
        if (d > tol.optimality) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leave;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        const double a = at(i, *entering);
        if (a <= tol.pivot) continue;
        const double ratio = std::max(rhs(i), 0.0) / a;
        if (!leave || ratio < best - 1e-12) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + 1e-12 && basis_[i] < basis_[*leave]) {
          leave = i;
        }
      }
      if (!leave) return false;
      pivot(*leave, *entering);
    }
    throw SolverError(ErrorKind::kInternal, "reference simplex did not terminate");
  }

  double value(std::span<const double> obj) {
    double v = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) v += obj[basis_[i]] * rhs(i);
    return v;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp_reference(const DenseMatrix& a, std::span<const double> b,
                              std::span<const double> c, const Tolerances& tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) {
    throw SolverError(ErrorKind::kDimensionMismatch, "reference LP dimensions");
  }

  std::vector<std::size_t> negative_rows;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0.0) negative_rows.push_back(i);
  }
  const std::size_t total = n + m + negative_rows.size();
  Tableau t(m, total);

  std::size_t next_artificial = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * a(i, j);
    t.at(i, n + i) = sign;
    t.rhs(i) = sign * b[i];
    if (b[i] < 0.0) {
      t.at(i, next_artificial) = 1.0;
      t.basic(i) = next_artificial++;
    } else {
      t.basic(i) = n + i;
    }
  }

  std::vector<bool> allowed(total, true);
  if (!negative_rows.empty()) {
    std::vector<double> phase_one(total, 0.0);
    for (std::size_t j = n + m; j < total; ++j) phase_one[j] = -1.0;
    t.maximize(phase_one, allowed, tol);
    if (t.value(phase_one) < -tol.feasibility) {
      throw SolverError(ErrorKind::kInfeasible, "reference LP is infeasible");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basic(i) < n + m) continue;
      for (std::size_t j = 0; j < n + m; ++j) {
        if (std::abs(t.at(i, j)) > tol.pivot) {
          t.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = n + m; j < total; ++j) allowed[j] = false;
  }

  std::vector<double> objective(total, 0.0);
  std::copy(c.begin(), c.end(), objective.begin());
  if (!t.maximize(objective, allowed, tol)) {
    throw SolverError(ErrorKind::kUnbounded, "reference LP is unbounded");
  }

  LpSolution sol;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basic(i) < n) sol.x[t.basic(i)] = std::max(t.rhs(i), 0.0);
  }
  sol.value = dot(c, sol.x);
  return sol;
}

}  // namespace dwd
