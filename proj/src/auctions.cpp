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

#include "dwd/auctions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "dwd/errors.hpp"

namespace dwd {

void AuctionInstance::validate() const {
  if (players == 0 || units == 0) {
    throw SolverError(ErrorKind::kDimensionMismatch, "auction needs players >= 1 and units >= 1");
  }
  if (valuations.size() != players) {
    throw SolverError(ErrorKind::kDimensionMismatch,
                      "expected " + std::to_string(players) + " valuation rows");
  }
  for (const auto& row : valuations) {
    if (row.size() != units) {
      throw SolverError(ErrorKind::kDimensionMismatch,
                        "every valuation row needs " + std::to_string(units) + " entries");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw SolverError(ErrorKind::kNonFinite, "valuation is not finite");
      if (v < 0.0) throw SolverError(ErrorKind::kNegativeInput, "valuations must be >= 0");
    }
  }
}

std::vector<double> AuctionInstance::flat_valuations() const {
  std::vector<double> c;
  c.reserve(variable_count());
  for (const auto& row : valuations) c.insert(c.end(), row.begin(), row.end());
  return c;
}

AuctionLp build_lp(const AuctionInstance& instance) {
  instance.validate();
  const std::size_t np = instance.players;
  const std::size_t mu = instance.units;
  AuctionLp lp;
  lp.a = DenseMatrix(np + 1, np * mu);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 1; j <= mu; ++j) {
      lp.a(i, instance.variable(i, j)) = 1.0;
      lp.a(np, instance.variable(i, j)) = static_cast<double>(j);
    }
  }
  lp.b.assign(np, 1.0);
  lp.b.push_back(static_cast<double>(mu));
  lp.c = instance.flat_valuations();
  return lp;
}

bool is_feasible_assignment(const AuctionInstance& instance, const IntegerPoint& x) {
  if (x.size() != instance.variable_count()) return false;
  std::int64_t supply = 0;
  for (std::size_t i = 0; i < instance.players; ++i) {
    std::int64_t chosen = 0;
    for (std::size_t j = 1; j <= instance.units; ++j) {
      const auto v = x[instance.variable(i, j)];
      if (v > 1) return false;
      chosen += v;
      supply += v * static_cast<std::int64_t>(j);
    }
    if (chosen > 1) return false;
  }
  return supply <= static_cast<std::int64_t>(instance.units);
}

namespace {

constexpr double kTieEps = 1e-12;

void check_cost(const AuctionInstance& instance, std::span<const double> cost) {
  if (cost.size() != instance.variable_count()) {
    throw SolverError(ErrorKind::kDimensionMismatch,
                      "cost has " + std::to_string(cost.size()) + " entries, expected " +
                          std::to_string(instance.variable_count()));
  }
  for (double v : cost) {
    if (v < 0.0) {
      throw SolverError(ErrorKind::kNegativeInput,
                        "winner determination expects nonnegative costs");
    }
  }
}

}  // namespace

IntegerPoint exact_winner_determination(const AuctionInstance& instance,
                                        std::span<const double> cost) {
  check_cost(instance, cost);
  const std::size_t np = instance.players;
  const std::size_t mu = instance.units;

  struct Cell {
    double value = 0.0;
    std::size_t units = 0;
    std::size_t choice = 0;
  };
  // table[i][u]: best assignment of players i.. with u units available.
  std::vector<std::vector<Cell>> table(np + 1, std::vector<Cell>(mu + 1));
  for (std::size_t i = np; i-- > 0;) {
    for (std::size_t u = 0; u <= mu; ++u) {
      Cell best;
      bool have = false;
      for (std::size_t j = u + 1; j-- > 0;) {
        const Cell& rest = table[i + 1][u - j];
        const double value = (j == 0 ? 0.0 : cost[instance.variable(i, j)]) + rest.value;
        const std::size_t used = j + rest.units;
        const bool better = !have || value > best.value + kTieEps ||
                            (value >= best.value - kTieEps && used < best.units);
        if (better) {
          best = {value, used, j};
          have = true;
        }
      }
      table[i][u] = best;
    }
  }

  IntegerPoint x(instance.variable_count());
  std::size_t left = mu;
  for (std::size_t i = 0; i < np; ++i) {
    const std::size_t j = table[i][left].choice;
    if (j > 0) {
      x.set(instance.variable(i, j), 1);
      left -= j;
    }
  }
  return x;
}

IntegerPoint greedy_winner_determination(const AuctionInstance& instance,
                                         std::span<const double> cost) {
  check_cost(instance, cost);
  const std::size_t np = instance.players;
  const std::size_t mu = instance.units;

  struct Step {
    std::size_t player;
    std::size_t to;
    std::size_t du;
    double slope;
  };
  std::vector<Step> steps;
  for (std::size_t i = 0; i < np; ++i) {
    std::size_t at = 0;
    double at_value = 0.0;
    while (true) {
      std::size_t next = 0;
      double next_slope = 0.0;
      for (std::size_t j = at + 1; j <= mu; ++j) {
        const double gain = cost[instance.variable(i, j)] - at_value;
        if (gain <= 0.0) continue;
        const double slope = gain / static_cast<double>(j - at);
        if (next == 0 || slope >= next_slope) {
          next = j;
          next_slope = slope;
        }
      }
      if (next == 0) break;
      steps.push_back({i, next, next - at, next_slope});
      at = next;
      at_value = cost[instance.variable(i, next)];
    }
  }
  // Hull slopes strictly decrease along each player's chain, so a stable
  // sort never takes a step before its predecessor.
  std::stable_sort(steps.begin(), steps.end(),
                   [](const Step& a, const Step& b) { return a.slope > b.slope; });

  std::vector<std::size_t> level(np, 0);
  std::size_t left = mu;
  for (const Step& s : steps) {
    if (s.du > left) break;
    level[s.player] = s.to;
    left -= s.du;
  }
  double bundle_value = 0.0;
  for (std::size_t i = 0; i < np; ++i) {
    if (level[i] > 0) bundle_value += cost[instance.variable(i, level[i])];
  }

  std::size_t single = 0;
  for (std::size_t v = 1; v < cost.size(); ++v) {
    if (cost[v] > cost[single]) single = v;
  }

  IntegerPoint x(instance.variable_count());
  if (cost[single] > bundle_value + kTieEps) {
    x.set(single, 1);
  } else {
    for (std::size_t i = 0; i < np; ++i) {
      if (level[i] > 0) x.set(instance.variable(i, level[i]), 1);
    }
  }
  return x;
}

AuctionInstance generate_instance(std::size_t players, std::size_t units,
                                  std::uint64_t seed) {
  AuctionInstance inst;
  inst.players = players;
  inst.units = units;
  std::mt19937_64 rng(seed);
  inst.valuations.assign(players, std::vector<double>(units, 0.0));
  for (auto& row : inst.valuations) {
    double total = 0.0;
    for (double& v : row) {
      total += static_cast<double>(rng() % 11);
      v = total;
    }
  }
  inst.validate();
  return inst;
}

AuctionInstance generate_capped_instance(std::size_t players, std::size_t units,
                                         std::uint64_t seed, int cap) {
  if (cap < 0) throw SolverError(ErrorKind::kNegativeInput, "valuation cap must be >= 0");
  AuctionInstance inst;
  inst.players = players;
  inst.units = units;
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(cap) + 1;
  inst.valuations.assign(players, std::vector<double>(units, 0.0));
  for (auto& row : inst.valuations) {
    for (double& v : row) v = static_cast<double>(rng() % span);
    std::sort(row.begin(), row.end());
  }
  inst.validate();
  return inst;
}

ExactDpOracle::ExactDpOracle(AuctionInstance instance) : instance_(std::move(instance)) {
  instance_.validate();
}

IntegerPoint ExactDpOracle::best_point(std::span<const double> cost) const {
  return exact_winner_determination(instance_, cost);
}

GreedyOracle::GreedyOracle(AuctionInstance instance) : instance_(std::move(instance)) {
  instance_.validate();
}

IntegerPoint GreedyOracle::best_point(std::span<const double> cost) const {
  return greedy_winner_determination(instance_, cost);
}

}  // namespace dwd
