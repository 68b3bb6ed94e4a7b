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
#include <span>
#include <vector>

#include "dwd/auctions.hpp"
#include "dwd/dense_matrix.hpp"
#include "dwd/polytope.hpp"

namespace dwd::testing {

// All vertices of {x : Ax <= b, x >= 0}, found by solving every square
// subsystem of active constraints. Intended for n <= 6, m <= 4.
std::vector<std::vector<double>> enumerate_vertices(const DenseMatrix& a,
                                                    std::span<const double> b);

// max cx over the vertex set. The polytope must be bounded.
double brute_force_lp(const DenseMatrix& a, std::span<const double> b,
                      std::span<const double> c);

// Every feasible assignment, each player taking 0..units units.
std::vector<IntegerPoint> enumerate_assignments(const AuctionInstance& instance);

double brute_force_assignment(const AuctionInstance& instance,
                              std::span<const double> cost);

// Random m x n matrix with small integer entries in [0, hi]; the last row is
// strictly positive so the polytope is bounded.
DenseMatrix random_bounded_matrix(std::size_t m, std::size_t n, std::uint64_t seed,
                                  int hi = 4);

// Rows with a random run of consecutive ones plus an all-ones last row.
// Interval matrices are totally unimodular, so with integer b every vertex
// is integral.
DenseMatrix random_interval_matrix(std::size_t m, std::size_t n, std::uint64_t seed);

std::vector<double> random_vector(std::size_t n, std::uint64_t seed, int lo, int hi);

AuctionInstance example_instance();

}  // namespace dwd::testing
