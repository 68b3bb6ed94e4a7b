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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "dwd/dense_matrix.hpp"

namespace dwd {

// P = { x : A x <= b, x >= 0 } with b >= 0.
struct Polytope {
  DenseMatrix a;
  std::vector<double> b;

  Polytope() = default;
  Polytope(DenseMatrix a, std::vector<double> b);

  std::size_t rows() const { return a.rows(); }
  std::size_t dimension() const { return a.cols(); }

  // Checks shape, m >= 1, n >= 1 and b >= 0.
  void validate() const;
  bool contains(std::span<const double> x, double tol) const;
};

// Nonnegative integer vector; an extreme point of the integral polytope Q.
class IntegerPoint {
 public:
  IntegerPoint() = default;
  explicit IntegerPoint(std::size_t n) : coords_(n, 0) {}
  explicit IntegerPoint(std::vector<std::int64_t> coords);
  IntegerPoint(std::initializer_list<std::int64_t> coords)
      : IntegerPoint(std::vector<std::int64_t>(coords)) {}

  static IntegerPoint zero(std::size_t n) { return IntegerPoint(n); }

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  // Setting a negative coordinate throws.
  void set(std::size_t i, std::int64_t v);
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_zero() const;
  double dot(std::span<const double> cost) const;
  std::vector<double> as_real() const;

  bool operator==(const IntegerPoint&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

// Weighted integer points; weights are nonnegative and sum to one.
struct ConvexCombination {
  std::vector<IntegerPoint> points;
  std::vector<double> weights;
  std::vector<double> combined_point;
  double objective = 0.0;

  std::size_t support(double eps = 1e-9) const;
  double weight_sum() const;
};

// Fills combined_point and objective from points and weights.
void finalize_combination(ConvexCombination& combo, std::size_t dimension,
                          std::span<const double> c);

// The integer subroutine driving both decompositions. For every cost vector
// it is called with, the returned point X must satisfy cost.X >= cost.x for
// all x in P. Implementations must be safe to call concurrently: best_point
// is const and must not mutate shared state.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual std::size_t dimension() const = 0;
  virtual IntegerPoint best_point(std::span<const double> cost) const = 0;
};

}  // namespace dwd
