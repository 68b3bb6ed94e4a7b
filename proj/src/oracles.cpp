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

#include "dwd/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "dwd/errors.hpp"

namespace dwd {

IntegerPoint PackingWrap::best_point(std::span<const double> cost) const {
  std::vector<double> clamped(cost.begin(), cost.end());
  for (double& v : clamped) v = std::max(v, 0.0);
  IntegerPoint x = inner_->best_point(clamped);
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (cost[i] < 0.0) x.set(i, 0);
  }
  return x;
}

namespace {

class OwningPackingWrap final : public Oracle {
 public:
  explicit OwningPackingWrap(std::shared_ptr<const Oracle> inner)
      : inner_(std::move(inner)), wrap_(*inner_) {}
  std::size_t dimension() const override { return wrap_.dimension(); }
  IntegerPoint best_point(std::span<const double> cost) const override {
    return wrap_.best_point(cost);
  }

 private:
  std::shared_ptr<const Oracle> inner_;
  PackingWrap wrap_;
};

}  // namespace

std::shared_ptr<const Oracle> make_packing_oracle(std::shared_ptr<const Oracle> inner) {
  return std::make_shared<OwningPackingWrap>(std::move(inner));
}

Polytope ScaledPolytope::effective() const { return scale_polytope(base, beta); }

Polytope scale_polytope(const Polytope& p, double beta) {
  if (!(beta >= 1.0) || !std::isfinite(beta)) {
    throw SolverError(ErrorKind::kInvalidBeta,
                      "beta must be a finite number >= 1, got " + std::to_string(beta));
  }
  Polytope out = p;
  for (double& v : out.b) v /= beta;
  return out;
}

PointDecompositionProblem setup_point_decomposition(std::span<const double> x_star) {
  if (x_star.empty()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "x* must have at least one coordinate");
  }
  for (double v : x_star) {
    if (!std::isfinite(v)) throw SolverError(ErrorKind::kNonFinite, "x* is not finite");
    if (v < 0.0) throw SolverError(ErrorKind::kNegativeInput, "x* must be nonnegative");
  }
  PointDecompositionProblem problem;
  problem.x_star.assign(x_star.begin(), x_star.end());
  problem.polytope = Polytope(DenseMatrix::identity(x_star.size()), problem.x_star);
  problem.cost = problem.x_star;
  return problem;
}

double reconstruction_error(const ConvexCombination& combo,
                            std::span<const double> x_star) {
  if (combo.combined_point.size() != x_star.size()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "reconstruction dimensions");
  }
  double err = 0.0;
  for (std::size_t i = 0; i < x_star.size(); ++i) {
    err = std::max(err, std::abs(combo.combined_point[i] - x_star[i]));
  }
  return err;
}

namespace {

constexpr double kCapacitySlack = 1e-9;

void require_packing_matrix(const Polytope& p) {
  p.validate();
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    bool bounded = false;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      if (p.a(i, j) < 0.0) {
        throw SolverError(ErrorKind::kNegativeInput,
                          "integer oracles need a nonnegative constraint matrix");
      }
      bounded = bounded || p.a(i, j) > 0.0;
    }
    if (!bounded) {
      throw SolverError(ErrorKind::kUnbounded,
                        "variable " + std::to_string(j + 1) + " has no bounding row");
    }
  }
}

void require_nonnegative(std::span<const double> cost, std::size_t n) {
  if (cost.size() != n) {
    throw SolverError(ErrorKind::kDimensionMismatch, "cost vector length");
  }
  for (double v : cost) {
    if (v < 0.0) {
      throw SolverError(ErrorKind::kNegativeInput,
                        "oracle expects nonnegative costs; wrap it in PackingWrap");
    }
  }
}

std::int64_t max_amount(const Polytope& p, std::span<const double> remaining,
                        std::size_t j) {
  double amount = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (p.a(i, j) > 0.0) amount = std::min(amount, remaining[i] / p.a(i, j));
  }
  return static_cast<std::int64_t>(std::floor(amount + kCapacitySlack));
}

}  // namespace

EnumerationOracle::EnumerationOracle(Polytope integral_hull)
    : polytope_(std::move(integral_hull)) {
  require_packing_matrix(polytope_);
  for (std::size_t j = 0; j < polytope_.dimension(); ++j) {
    upper_.push_back(max_amount(polytope_, polytope_.b, j));
  }
}

IntegerPoint EnumerationOracle::best_point(std::span<const double> cost) const {
  const std::size_t n = polytope_.dimension();
  require_nonnegative(cost, n);

  // Optimistic completion value for pruning.
  std::vector<double> tail(n + 1, 0.0);
  for (std::size_t j = n; j-- > 0;) {
    tail[j] = tail[j + 1] + cost[j] * static_cast<double>(upper_[j]);
  }

  IntegerPoint best(n);
  double best_value = 0.0;
  IntegerPoint current(n);
  std::vector<double> remaining = polytope_.b;

  auto search = [&](auto&& self, std::size_t j, double value) -> void {
    if (j == n) {
      if (value > best_value + 1e-12) {
        best_value = value;
        best = current;
      }
      return;
    }
    if (value + tail[j] <= best_value + 1e-12) return;
    if (cost[j] <= 0.0) {
      self(self, j + 1, value);
      return;
    }
    const std::int64_t top = std::min(upper_[j], max_amount(polytope_, remaining, j));
    for (std::int64_t k = top; k >= 0; --k) {
      current.set(j, k);
      for (std::size_t i = 0; i < polytope_.rows(); ++i) {
        remaining[i] -= polytope_.a(i, j) * static_cast<double>(k);
      }
      self(self, j + 1, value + cost[j] * static_cast<double>(k));
      for (std::size_t i = 0; i < polytope_.rows(); ++i) {
        remaining[i] += polytope_.a(i, j) * static_cast<double>(k);
      }
    }
    current.set(j, 0);
  };
  search(search, 0, 0.0);
  return best;
}

CoordinateGreedyOracle::CoordinateGreedyOracle(Polytope integral_hull)
    : polytope_(std::move(integral_hull)) {
  require_packing_matrix(polytope_);
}

IntegerPoint CoordinateGreedyOracle::best_point(std::span<const double> cost) const {
  const std::size_t n = polytope_.dimension();
  require_nonnegative(cost, n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cost[a] > cost[b]; });

  IntegerPoint x(n);
  std::vector<double> remaining = polytope_.b;
  for (std::size_t j : order) {
    if (cost[j] <= 0.0) break;
    const std::int64_t k = max_amount(polytope_, remaining, j);
    if (k <= 0) continue;
    x.set(j, k);
    for (std::size_t i = 0; i < polytope_.rows(); ++i) {
      remaining[i] -= polytope_.a(i, j) * static_cast<double>(k);
    }
  }
  return x;
}

}  // namespace dwd
