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

#include "dwd/instance_file.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "dwd/errors.hpp"
#include "dwd/oracles.hpp"

namespace dwd::io {

namespace {

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field \"") + name + "\" has the wrong type");
  }
}

std::vector<double> number_array(const Json& j, const char* name) {
  return field<std::vector<double>>(j, name);
}

AuctionFile parse_auction(const Json& j) {
  AuctionFile f;
  f.instance.players = field<std::size_t>(j, "players");
  f.instance.units = field<std::size_t>(j, "units");
  f.instance.valuations = field<std::vector<std::vector<double>>>(j, "valuations");
  try {
    f.instance.validate();
  } catch (const SolverError& e) {
    throw ParseError(std::string("invalid auction: ") + e.what());
  }
  return f;
}

PolytopeFile parse_polytope(const Json& j) {
  PolytopeFile f;
  const auto rows = field<std::vector<std::vector<double>>>(j, "A");
  if (rows.empty() || rows.front().empty()) throw ParseError("\"A\" must be a non-empty matrix");
  const std::size_t n = rows.front().size();
  std::vector<double> entries;
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("\"A\" rows have different lengths");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  try {
    f.polytope = Polytope(DenseMatrix(rows.size(), n, std::move(entries)),
                          number_array(j, "b"));
    f.polytope.validate();
  } catch (const SolverError& e) {
    throw ParseError(std::string("invalid polytope: ") + e.what());
  }
  f.c = number_array(j, "c");
  if (f.c.size() != n) throw ParseError("\"c\" length does not match the columns of \"A\"");
  if (std::any_of(f.c.begin(), f.c.end(), [](double v) { return !(v >= 0.0); })) {
    throw ParseError("\"c\" must be nonnegative");
  }
  if (j.contains("oracle")) f.oracle = field<std::string>(j, "oracle");
  if (f.oracle != "exact-dp" && f.oracle != "greedy") {
    throw ParseError("\"oracle\" must be \"exact-dp\" or \"greedy\"");
  }
  return f;
}

BaseInstance as_base(InstanceFile file) {
  if (auto* a = std::get_if<AuctionFile>(&file)) return std::move(*a);
  if (auto* p = std::get_if<PolytopeFile>(&file)) return std::move(*p);
  throw ParseError("a point file must reference an auction or polytope instance");
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

Coordinates Coordinates::of(const BaseInstance& base) {
  if (const auto* a = std::get_if<AuctionFile>(&base)) return auction(a->instance);
  return plain(std::get<PolytopeFile>(base).polytope.dimension());
}

std::string Coordinates::key(std::size_t index) const {
  if (units_ == 0) return std::to_string(index + 1);
  return std::to_string(index / units_ + 1) + "," + std::to_string(index % units_ + 1);
}

std::size_t Coordinates::index(const std::string& key) const {
  auto parse_positive = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw ParseError("malformed coordinate key \"" + key + "\"");
    }
    const std::size_t v = std::stoul(s);
    if (v == 0) throw ParseError("coordinate keys are 1-based: \"" + key + "\"");
    return v;
  };
  std::size_t idx = 0;
  if (units_ == 0) {
    idx = parse_positive(key) - 1;
  } else {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("auction keys look like \"i,j\": \"" + key + "\"");
    const std::size_t player = parse_positive(key.substr(0, comma));
    const std::size_t quantity = parse_positive(key.substr(comma + 1));
    if (quantity > units_) throw ParseError("quantity out of range in \"" + key + "\"");
    idx = (player - 1) * units_ + (quantity - 1);
  }
  if (idx >= dimension_) throw ParseError("coordinate out of range: \"" + key + "\"");
  return idx;
}

InstanceFile parse_instance(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "auction") return parse_auction(j);
  if (kind == "polytope") return parse_polytope(j);
  if (kind != "point") throw ParseError("unknown instance kind \"" + kind + "\"");

  if (!j.contains("instance")) throw ParseError("point file needs an \"instance\"");
  const Json& ref = j.at("instance");
  PointFile f;
  if (ref.is_string()) {
    const std::filesystem::path path = base_dir / ref.get<std::string>();
    f.base = as_base(parse_instance(read_json(path), path.parent_path()));
  } else {
    f.base = as_base(parse_instance(ref, base_dir));
  }
  if (!j.contains("x_star")) throw ParseError("point file needs \"x_star\"");
  f.x_star = dense_from_json(j.at("x_star"), Coordinates::of(f.base));
  for (double v : f.x_star) {
    if (!std::isfinite(v) || v < 0.0) throw ParseError("x_star must be finite and nonnegative");
  }
  return f;
}

InstanceFile load_instance(const std::filesystem::path& path) {
  return parse_instance(read_json(path), path.parent_path());
}

Json to_json(const AuctionInstance& instance) {
  Json j;
  j["kind"] = "auction";
  j["players"] = instance.players;
  j["units"] = instance.units;
  j["valuations"] = instance.valuations;
  return j;
}

Json sparse(std::span<const double> values, const Coordinates& coords) {
  Json j = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) j[coords.key(i)] = values[i];
  }
  return j;
}

Json sparse(const IntegerPoint& point, const Coordinates& coords) {
  Json j = Json::object();
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] != 0) j[coords.key(i)] = point[i];
  }
  return j;
}

std::vector<double> dense_from_json(const Json& j, const Coordinates& coords) {
  std::vector<double> out(coords.dimension(), 0.0);
  if (j.is_array()) {
    if (j.size() != coords.dimension()) {
      throw ParseError("dense vector has " + std::to_string(j.size()) + " entries, expected " +
                       std::to_string(coords.dimension()));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!j[i].is_number()) throw ParseError("dense vector entries must be numbers");
      out[i] = j[i].get<double>();
    }
    return out;
  }
  if (!j.is_object()) throw ParseError("vector must be an array or a sparse object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw ParseError("sparse entry \"" + key + "\" is not a number");
    out[coords.index(key)] = value.get<double>();
  }
  return out;
}

Json result_json(const ConvexCombination& combo, const ResultInfo& info,
                 const Coordinates& coords) {
  Json j;
  j["method"] = info.method;
  j["kind"] = info.kind;
  j["beta"] = info.beta;
  j["objective"] = combo.objective;
  j["iterations"] = info.iterations;
  j["support"] = combo.points.size();
  if (info.reconstruction_error) j["reconstruction_error"] = *info.reconstruction_error;
  j["combined_point"] = sparse(combo.combined_point, coords);
  Json parts = Json::array();
  for (std::size_t k = 0; k < combo.points.size(); ++k) {
    Json part;
    part["point"] = sparse(combo.points[k], coords);
    part["weight"] = combo.weights[k];
    parts.push_back(std::move(part));
  }
  j["decomposition"] = std::move(parts);
  return j;
}

namespace {

struct CheckTarget {
  Polytope scaled;             // where the combined point must lie
  Polytope hull;               // integer points must satisfy this (unscaled)
  std::vector<double> c;
  std::optional<AuctionInstance> auction;
  const std::vector<double>* x_star = nullptr;
};

CheckTarget target_for(const InstanceFile& instance, double beta) {
  CheckTarget t;
  auto fill_base = [&](const BaseInstance& base) {
    if (const auto* a = std::get_if<AuctionFile>(&base)) {
      const AuctionLp lp = build_lp(a->instance);
      t.hull = lp.polytope();
      t.c = lp.c;
      t.auction = a->instance;
    } else {
      const auto& p = std::get<PolytopeFile>(base);
      t.hull = p.polytope;
      t.c = p.c;
    }
  };
  if (const auto* point = std::get_if<PointFile>(&instance)) {
    fill_base(point->base);
    const auto problem = setup_point_decomposition(point->x_star);
    t.scaled = problem.polytope;
    t.c = problem.cost;
    t.x_star = &point->x_star;
  } else if (const auto* a = std::get_if<AuctionFile>(&instance)) {
    fill_base(BaseInstance(*a));
    t.scaled = scale_polytope(t.hull, beta);
  } else {
    fill_base(BaseInstance(std::get<PolytopeFile>(instance)));
    t.scaled = scale_polytope(t.hull, beta);
  }
  return t;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

CheckReport check_result(const InstanceFile& instance, const Json& result,
                         std::optional<double> beta) {
  CheckReport report;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  double b = beta.value_or(1.0);
  if (!beta && result.contains("beta") && result["beta"].is_number()) {
    b = result["beta"].get<double>();
  }
  const CheckTarget t = target_for(instance, b);
  const std::size_t n = t.c.size();
  Coordinates coords = t.auction ? Coordinates::auction(*t.auction) : Coordinates::plain(n);

  if (!result.contains("decomposition") || !result["decomposition"].is_array()) {
    throw ParseError("result has no \"decomposition\" array");
  }
  std::vector<double> combined(n, 0.0);
  std::size_t support = 0;
  for (const auto& part : result["decomposition"]) {
    const double w = field<double>(part, "weight");
    if (!part.contains("point")) throw ParseError("decomposition entry without \"point\"");
    const auto coordsv = dense_from_json(part["point"], coords);
    std::vector<std::int64_t> ints(n);
    bool integral = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (coordsv[i] < 0.0 || std::floor(coordsv[i]) != coordsv[i]) integral = false;
      ints[i] = static_cast<std::int64_t>(std::llround(std::max(coordsv[i], 0.0)));
    }
    if (!integral) {
      fail("a decomposition point is not a nonnegative integer vector");
      continue;
    }
    const IntegerPoint p(ints);
    if (t.auction && !is_feasible_assignment(*t.auction, p)) {
      fail("a decomposition point is not a feasible assignment");
    } else if (!t.auction && !t.hull.contains(p.as_real(), 1e-9)) {
      fail("a decomposition point violates A x <= b");
    }
    if (w < -1e-12) fail("negative weight " + fmt(w));
    if (w > 1e-9) ++support;
    report.weight_sum += w;
    for (std::size_t i = 0; i < n; ++i) combined[i] += w * coordsv[i];
  }

  if (std::abs(report.weight_sum - 1.0) > 1e-9) {
    fail("weights sum to " + fmt(report.weight_sum));
  }
  if (result.contains("combined_point")) {
    const auto reported = dense_from_json(result["combined_point"], coords);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(reported[i] - combined[i]) > 1e-9) {
        fail("combined_point[" + coords.key(i) + "] differs from the weighted sum");
        break;
      }
    }
  }
  const double objective = dot(t.c, combined);
  if (result.contains("objective")) {
    const double reported = field<double>(result, "objective");
    if (std::abs(reported - objective) > 1e-9 * (1.0 + std::abs(objective))) {
      fail("objective " + fmt(reported) + " but the decomposition gives " + fmt(objective));
    }
  }

  const auto ax = t.scaled.a.multiply(combined);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    report.max_violation = std::max(report.max_violation, ax[i] - t.scaled.b[i]);
  }
  for (double v : combined) report.max_violation = std::max(report.max_violation, -v);
  if (report.max_violation > 1e-8) {
    fail("combined point violates the scaled constraints by " + fmt(report.max_violation));
  }

  std::size_t bound = t.scaled.rows() + 1;
  if (t.x_star) {
    bound = 1 + static_cast<std::size_t>(std::count_if(
                    t.x_star->begin(), t.x_star->end(), [](double v) { return v > 0.0; }));
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(combined[i] - (*t.x_star)[i]));
    if (err > 1e-6) fail("combined point misses x* by " + fmt(err));
  }
  if (support > bound) {
    fail("support " + std::to_string(support) + " exceeds " + std::to_string(bound));
  }
  return report;
}

}  // namespace dwd::io
