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

#include "dwd/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dwd/errors.hpp"

namespace dwd {

Polytope::Polytope(DenseMatrix a_in, std::vector<double> b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {}

void Polytope::validate() const {
  if (a.rows() == 0 || a.cols() == 0) {
    throw SolverError(ErrorKind::kDimensionMismatch, "polytope needs m >= 1 and n >= 1");
  }
  if (b.size() != a.rows()) {
    throw SolverError(ErrorKind::kDimensionMismatch,
                      "b has " + std::to_string(b.size()) + " entries for " +
                          std::to_string(a.rows()) + " rows");
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!std::isfinite(b[i])) {
      throw SolverError(ErrorKind::kNonFinite, "b is not finite");
    }
    if (b[i] < 0.0) {
      throw SolverError(ErrorKind::kInfeasibleStart,
                        "b[" + std::to_string(i) + "] < 0: the zero point is not feasible");
    }
  }
}

bool Polytope::contains(std::span<const double> x, double tol) const {
  if (x.size() != dimension()) return false;
  if (std::any_of(x.begin(), x.end(), [&](double v) { return v < -tol; })) return false;
  const auto ax = a.multiply(x);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (ax[i] > b[i] + tol) return false;
  }
  return true;
}

IntegerPoint::IntegerPoint(std::vector<std::int64_t> coords)
    : coords_(std::move(coords)) {
  for (auto v : coords_) {
    if (v < 0) throw SolverError(ErrorKind::kNegativeInput, "negative point coordinate");
  }
}

void IntegerPoint::set(std::size_t i, std::int64_t v) {
  if (v < 0) throw SolverError(ErrorKind::kNegativeInput, "negative point coordinate");
  coords_.at(i) = v;
}

bool IntegerPoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v == 0; });
}

double IntegerPoint::dot(std::span<const double> cost) const {
  if (cost.size() != coords_.size()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "cost and point sizes differ");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) s += cost[i] * static_cast<double>(coords_[i]);
  }
  return s;
}

std::vector<double> IntegerPoint::as_real() const {
  return {coords_.begin(), coords_.end()};
}

std::size_t ConvexCombination::support(double eps) const {
  return static_cast<std::size_t>(
      std::count_if(weights.begin(), weights.end(), [&](double w) { return w > eps; }));
}

double ConvexCombination::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

void finalize_combination(ConvexCombination& combo, std::size_t dimension,
                          std::span<const double> c) {
  combo.combined_point.assign(dimension, 0.0);
  for (std::size_t j = 0; j < combo.points.size(); ++j) {
    const auto& p = combo.points[j];
    for (std::size_t i = 0; i < dimension; ++i) {
      if (p[i] != 0) combo.combined_point[i] += combo.weights[j] * static_cast<double>(p[i]);
    }
  }
  combo.objective = dot(c, combo.combined_point);
}

}  // namespace dwd
