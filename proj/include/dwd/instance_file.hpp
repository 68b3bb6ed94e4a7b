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

// JSON instance and result files used by the command-line tool.
//
// Instance files carry a "kind":
//   {"kind": "auction", "players": 3, "units": 4,
//    "valuations": [[6, 6, 6, 6], [1, 4, 4, 6], [0, 1, 1, 1]]}
//   {"kind": "polytope", "A": [[...], ...], "b": [...], "c": [...],
//    "oracle": "exact-dp" | "greedy"}
//   {"kind": "point", "x_star": {"1,1": 0.5, ...} or [dense array],
//    "instance": <inline instance object> or "path/relative/to/file.json"}
//
// Coordinates are written sparsely. Auction variables use "i,j" (player i
// receives j units, both 1-based); polytope variables use their 1-based
// index.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "dwd/auctions.hpp"
#include "dwd/polytope.hpp"

namespace dwd::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AuctionFile {
  AuctionInstance instance;
};

struct PolytopeFile {
  Polytope polytope;  // unscaled; the integer oracle works on its lattice points
  std::vector<double> c;
  std::string oracle = "exact-dp";
};

using BaseInstance = std::variant<AuctionFile, PolytopeFile>;

struct PointFile {
  std::vector<double> x_star;
  BaseInstance base;
};

using InstanceFile = std::variant<AuctionFile, PolytopeFile, PointFile>;

// Maps a variable index to its sparse key and back.
class Coordinates {
 public:
  static Coordinates plain(std::size_t dimension) { return {dimension, 0}; }
  static Coordinates auction(const AuctionInstance& inst) {
    return {inst.variable_count(), inst.units};
  }
  static Coordinates of(const BaseInstance& base);

  std::size_t dimension() const { return dimension_; }
  std::string key(std::size_t index) const;
  // Throws ParseError for malformed or out-of-range keys.
  std::size_t index(const std::string& key) const;

 private:
  Coordinates(std::size_t dimension, std::size_t units)
      : dimension_(dimension), units_(units) {}
  std::size_t dimension_;
  std::size_t units_;
};

InstanceFile parse_instance(const Json& j, const std::filesystem::path& base_dir = {});
InstanceFile load_instance(const std::filesystem::path& path);

Json to_json(const AuctionInstance& instance);

// Sparse object of the nonzero entries.
Json sparse(std::span<const double> values, const Coordinates& coords);
Json sparse(const IntegerPoint& point, const Coordinates& coords);
std::vector<double> dense_from_json(const Json& j, const Coordinates& coords);

struct ResultInfo {
  std::string method;  // "dw" | "benders"
  std::string kind;    // "auction" | "polytope" | "point"
  double beta = 1.0;
  std::size_t iterations = 0;
  std::optional<double> reconstruction_error;
};

Json result_json(const ConvexCombination& combo, const ResultInfo& info,
                 const Coordinates& coords);

struct CheckReport {
  bool ok() const { return failures.empty(); }
  std::vector<std::string> failures;
  double weight_sum = 0.0;
  double max_violation = 0.0;
};

// Recomputes everything in a result file from its decomposition alone:
// weights form a convex combination, the reported point and objective match,
// the combined point lies in the scaled polytope (or equals x* for point
// files), and every point is an integer point of the underlying hull.
// beta defaults to the value stored in the result.
CheckReport check_result(const InstanceFile& instance, const Json& result,
                         std::optional<double> beta = std::nullopt);

}  // namespace dwd::io
