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

// Multi-unit auctions: m identical units, each player i values j units at
// v_i(j). Variable x_ij says player i receives exactly j units; the LP
// relaxation has one row per player (sum_j x_ij <= 1) and a supply row
// (sum_ij j x_ij <= m). Variables are ordered player-major, quantity-minor.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dwd/dense_matrix.hpp"
#include "dwd/polytope.hpp"

namespace dwd {

struct AuctionInstance {
  std::size_t players = 0;
  std::size_t units = 0;
  // valuations[i][j - 1] = v_i(j)
  std::vector<std::vector<double>> valuations;

  // Shapes must agree and every value must be finite and >= 0.
  void validate() const;
  std::size_t variable_count() const { return players * units; }
  // Player and quantity are 0-based and 1-based respectively.
  std::size_t variable(std::size_t player, std::size_t quantity) const {
    return player * units + (quantity - 1);
  }
  std::vector<double> flat_valuations() const;
};

struct AuctionLp {
  DenseMatrix a;
  std::vector<double> b;
  std::vector<double> c;

  Polytope polytope() const { return {a, b}; }
};

AuctionLp build_lp(const AuctionInstance& instance);

// One quantity per player, total quantity within supply.
bool is_feasible_assignment(const AuctionInstance& instance,
                            const IntegerPoint& x);

// Exact maximization of cost.x over feasible assignments. DP over
// (player, units left); among optimal assignments the one using fewer units
// wins, then the one giving more units to lower-indexed players.
// cost must be nonnegative.
IntegerPoint exact_winner_determination(const AuctionInstance& instance,
                                        std::span<const double> cost);

// Half-approximation of the LP relaxation. Each player's options are reduced
// to the upper concave hull of (j, cost_ij); hull increments are taken in
// order of decreasing value per unit until one does not fit. The result is
// the better of that bundle and the single most valuable (player, quantity).
IntegerPoint greedy_winner_determination(const AuctionInstance& instance,
                                         std::span<const double> cost);

// Monotone valuations built from integer marginal values drawn uniformly
// from [0, 10]. The generator is a seeded mt19937_64, reduced modulo 11, so
// instances are identical across platforms.
AuctionInstance generate_instance(std::size_t players, std::size_t units,
                                  std::uint64_t seed);

// Monotone valuations with every value an integer in [0, cap]: m_u draws
// from [0, cap], sorted ascending.
AuctionInstance generate_capped_instance(std::size_t players, std::size_t units,
                                         std::uint64_t seed, int cap);

class ExactDpOracle final : public Oracle {
 public:
  explicit ExactDpOracle(AuctionInstance instance);
  std::size_t dimension() const override { return instance_.variable_count(); }
  IntegerPoint best_point(std::span<const double> cost) const override;

 private:
  AuctionInstance instance_;
};

class GreedyOracle final : public Oracle {
 public:
  explicit GreedyOracle(AuctionInstance instance);
  std::size_t dimension() const override { return instance_.variable_count(); }
  IntegerPoint best_point(std::span<const double> cost) const override;

 private:
  AuctionInstance instance_;
};

}  // namespace dwd
