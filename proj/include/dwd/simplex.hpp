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

// Dense revised-simplex kernel shared by the decomposition solvers, and a
// standalone two-phase tableau simplex used as the reference LP solver.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwd/dense_matrix.hpp"

namespace dwd {

struct Tolerances {
  double feasibility = 1e-9;
  double pivot = 1e-9;
  double optimality = 1e-9;
};

// Identifies the variable that is basic in a tableau row.
class BasisLabel {
 public:
  enum class Kind { kSlack, kPoint, kArtificial };

  static BasisLabel slack(std::size_t i) { return {Kind::kSlack, i}; }
  static BasisLabel point(std::size_t k) { return {Kind::kPoint, k}; }
  static BasisLabel artificial() { return {Kind::kArtificial, 0}; }

  Kind kind() const { return kind_; }
  std::size_t index() const { return index_; }
  bool is_point() const { return kind_ == Kind::kPoint; }
  bool is_slack() const { return kind_ == Kind::kSlack; }

  // "s1".."sm" (1-based, as in printed tableaus), "lambda<k>", "a".
  std::string name() const;

  bool operator==(const BasisLabel&) const = default;

 private:
  BasisLabel(Kind kind, std::size_t index) : kind_(kind), index_(index) {}
  Kind kind_;
  std::size_t index_;
};

// Revised-simplex tableau of a master problem with m linking rows plus one
// convexity row. Costs are held in minimization form: a column with
// user-facing (maximization) value v has cost -v, so `objective` is the
// negated master value and the dual row is (w, alpha) = c_B * B^-1.
struct MasterState {
  DenseMatrix basis_inverse;        // (m+1) x (m+1)
  std::vector<double> rhs;          // b_bar = B^-1 [b; 1]
  std::vector<double> dual_row;     // (w_1..w_m, alpha)
  double objective = 0.0;           // c_B * b_bar (minimization form)
  std::vector<BasisLabel> labels;   // one per row

  std::size_t rows() const { return rhs.size(); }
  std::size_t linking_rows() const { return rhs.size() - 1; }
  std::span<const double> w() const { return {dual_row.data(), linking_rows()}; }
  double alpha() const { return dual_row.back(); }
  // Master objective in maximization form.
  double value() const { return -objective; }
};

// Minimum-ratio rule over rows with entering_col[i] > tol. Ties go to the
// smallest row index. std::nullopt means no entry exceeds tol (unbounded).
std::optional<std::size_t> ratio_test(std::span<const double> rhs,
                                      std::span<const double> entering_col,
                                      double tol);

// y = B^-1 [Ax; 1]
std::vector<double> entering_column(const MasterState& state,
                                    std::span<const double> ax);

// Pivots on entering_col[r]: row r is divided by the pivot, every other row
// gets -entering_col[i] times the new row r, and row zero (dual row and
// objective) gets -reduced_cost times the new row r. Row updates run in
// parallel once the tableau is large enough to pay for the threads.
void pivot_in_place(MasterState& state, std::span<const double> entering_col,
                    double reduced_cost, std::size_t r, BasisLabel entering,
                    double feasibility_tol = 1e-9);

MasterState pivot(MasterState state, std::span<const double> entering_col,
                  double reduced_cost, std::size_t r, BasisLabel entering,
                  double feasibility_tol = 1e-9);

// Tableaus with at least this many rows use the OpenMP row update.
inline constexpr std::size_t kParallelPivotRows = 96;

namespace reference {
// Single-threaded pivot, kept as the baseline the parallel kernel is tested
// and benchmarked against.
void pivot_in_place(MasterState& state, std::span<const double> entering_col,
                    double reduced_cost, std::size_t r, BasisLabel entering,
                    double feasibility_tol = 1e-9);
}  // namespace reference

// max_{ij} |(B^-1 * basis_columns) - I|
double reconstruction_error(const MasterState& state,
                            const DenseMatrix& basis_columns);

// Rebuilds basis_inverse, rhs, dual row and objective from the original basis
// columns, their minimization-form costs and the right-hand side [b; 1].
void refactor(MasterState& state, const DenseMatrix& basis_columns,
              std::span<const double> basis_costs,
              std::span<const double> full_rhs);

struct LpSolution {
  std::vector<double> x;
  double value = 0.0;
};

// max { c x : A x <= b, x >= 0 } by a two-phase dense tableau simplex with
// Bland's rule. b may have negative entries (phase one then runs). Throws
// SolverError(kUnbounded) or SolverError(kInfeasible).
LpSolution solve_lp_reference(const DenseMatrix& a, std::span<const double> b,
                              std::span<const double> c,
                              const Tolerances& tol = {});

}  // namespace dwd
