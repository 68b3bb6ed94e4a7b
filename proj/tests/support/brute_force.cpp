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

#include "support/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace dwd::testing {
namespace {

// Solves the square system M x = r with partial pivoting. Returns false when
// M is singular.
bool solve_square(std::vector<std::vector<double>> m, std::vector<double> r,
                  std::vector<double>& x) {
  const std::size_t n = r.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(m[i][col]) > std::abs(m[best][col])) best = i;
    }
    if (std::abs(m[best][col]) < 1e-12) return false;
    std::swap(m[best], m[col]);
    std::swap(r[best], r[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      r[i] -= f * r[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / m[i][i];
  return true;
}

}  // namespace

std::vector<std::vector<double>> enumerate_vertices(const DenseMatrix& a,
                                                    std::span<const double> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t total = m + n;
  // Constraint k < m is row k of A; k >= m is -x_{k-m} <= 0.
  auto coeff = [&](std::size_t k, std::size_t j) {
    if (k < m) return a(k, j);
    return (k - m == j) ? -1.0 : 0.0;
  };
  auto bound = [&](std::size_t k) { return k < m ? b[k] : 0.0; };

  std::vector<std::vector<double>> vertices;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<std::vector<double>> sys;
    std::vector<double> rhs;
    for (std::size_t k = 0; k < total; ++k) {
      if (!pick[k]) continue;
      std::vector<double> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = coeff(k, j);
      sys.push_back(std::move(row));
      rhs.push_back(bound(k));
    }
    std::vector<double> x;
    if (!solve_square(sys, rhs, x)) continue;
    bool feasible = true;
    for (std::size_t k = 0; k < total && feasible; ++k) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) lhs += coeff(k, j) * x[j];
      feasible = lhs <= bound(k) + 1e-9;
    }
    if (feasible) vertices.push_back(std::move(x));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return vertices;
}

double brute_force_lp(const DenseMatrix& a, std::span<const double> b,
                      std::span<const double> c) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : enumerate_vertices(a, b)) best = std::max(best, dot(c, v));
  if (!std::isfinite(best)) throw std::logic_error("empty polytope");
  return best;
}

std::vector<IntegerPoint> enumerate_assignments(const AuctionInstance& instance) {
  const std::size_t np = instance.players;
  const std::size_t mu = instance.units;
  std::vector<IntegerPoint> out;
  std::vector<std::size_t> take(np, 0);
  while (true) {
    std::size_t used = 0;
    for (std::size_t q : take) used += q;
    if (used <= mu) {
      IntegerPoint x(instance.variable_count());
      for (std::size_t i = 0; i < np; ++i) {
        if (take[i] > 0) x.set(instance.variable(i, take[i]), 1);
      }
      out.push_back(std::move(x));
    }
    std::size_t i = 0;
    while (i < np && take[i] == mu) take[i++] = 0;
    if (i == np) break;
    ++take[i];
  }
  return out;
}

double brute_force_assignment(const AuctionInstance& instance,
                              std::span<const double> cost) {
  double best = 0.0;
  for (const auto& x : enumerate_assignments(instance)) best = std::max(best, x.dot(cost));
  return best;
}

DenseMatrix random_bounded_matrix(std::size_t m, std::size_t n, std::uint64_t seed,
                                  int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, hi);
  std::uniform_int_distribution<int> positive(1, hi);
  DenseMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = i + 1 == m ? positive(rng) : entry(rng);
    }
  }
  return a;
}

DenseMatrix random_interval_matrix(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  DenseMatrix a(m, n);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    std::size_t lo = pos(rng);
    std::size_t hi = pos(rng);
    if (lo > hi) std::swap(lo, hi);
    for (std::size_t j = lo; j <= hi; ++j) a(i, j) = 1.0;
  }
  for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = 1.0;
  return a;
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

AuctionInstance example_instance() {
  AuctionInstance inst;
  inst.players = 3;
  inst.units = 4;
  inst.valuations = {{6, 6, 6, 6}, {1, 4, 4, 6}, {0, 1, 1, 1}};
  return inst;
}

}  // namespace dwd::testing
