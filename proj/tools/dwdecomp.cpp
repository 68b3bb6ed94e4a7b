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

// dwdecomp: LP optimum plus an exact convex decomposition into integer
// points.
//
//   dwdecomp solve INSTANCE [--method dw|benders] [--beta B] [--trace] ...
//   dwdecomp decompose-point POINT_FILE [--trace] ...
//   dwdecomp generate --players N --units M --seed S
//   dwdecomp check INSTANCE RESULT
//
// Results are JSON on stdout (or --out); traces and diagnostics go to stderr.
// Exit codes: 0 success, 1 bad input, 2 solver failure, 3 the decomposition
// does not reconstruct the requested point or fails verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "dwd/auctions.hpp"
#include "dwd/benders_solver.hpp"
#include "dwd/dw_solver.hpp"
#include "dwd/errors.hpp"
#include "dwd/instance_file.hpp"
#include "dwd/oracles.hpp"
#include "dwd/trace.hpp"

namespace {

using dwd::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSolver = 2;
constexpr int kExitReconstruction = 3;
constexpr double kReconstructionLimit = 1e-6;

struct SolveArgs {
  std::string instance;
  std::string method = "dw";
  std::optional<double> beta;
  double tol = 1e-9;
  std::size_t max_iters = 10000;
  bool trace = false;
  std::string oracle;
  std::string out;
};

struct Problem {
  dwd::Polytope polytope;
  std::vector<double> c;
  std::shared_ptr<const dwd::Oracle> oracle;
  dwd::io::Coordinates coords = dwd::io::Coordinates::plain(0);
};

std::shared_ptr<const dwd::Oracle> base_oracle(const dwd::io::BaseInstance& base,
                                               const std::string& requested) {
  if (const auto* a = std::get_if<dwd::io::AuctionFile>(&base)) {
    if (requested == "greedy") return std::make_shared<dwd::GreedyOracle>(a->instance);
    return std::make_shared<dwd::ExactDpOracle>(a->instance);
  }
  const auto& p = std::get<dwd::io::PolytopeFile>(base);
  const std::string kind = requested.empty() ? p.oracle : requested;
  if (kind == "greedy") return std::make_shared<dwd::CoordinateGreedyOracle>(p.polytope);
  return std::make_shared<dwd::EnumerationOracle>(p.polytope);
}

void write_result(const Json& result, const std::string& out) {
  if (out.empty()) {
    std::cout << result.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw dwd::io::ParseError("cannot write " + out);
  f << result.dump(2) << '\n';
}

// Runs the selected method and returns the decomposition and iteration count.
std::pair<dwd::ConvexCombination, std::size_t> run_method(const Problem& p,
                                                          const SolveArgs& args) {
  dwd::Tolerances tol;
  tol.optimality = args.tol;
  if (args.method == "benders") {
    dwd::BendersOptions opts;
    opts.tol = tol;
    opts.max_rounds = args.max_iters;
    if (args.trace) {
      opts.on_round = [&](const dwd::BendersRoundEvent& e) {
        dwd::io::render_benders_round(std::cerr, e, p.coords);
      };
    }
    auto r = dwd::solve_benders(p.polytope, *p.oracle, p.c, opts);
    if (args.trace) {
      std::cerr << "Benders value " << dwd::io::format_number(r.solution.value) << " after "
                << r.rounds << " rounds\n";
    }
    return {std::move(r.combination), r.rounds};
  }

  dwd::DwOptions opts;
  opts.tol = tol;
  opts.max_iterations = args.max_iters;
  opts.on_warning = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
  std::optional<dwd::io::DwTraceRenderer> renderer;
  if (args.trace) {
    renderer.emplace(std::cerr, p.coords);
    renderer->initial(dwd::init_master(p.polytope));
    opts.on_iteration = [&](const dwd::DwIterationEvent& e) { (*renderer)(e); };
    opts.on_slack_pivot = [&](const dwd::SlackPivotEvent& e) { renderer->slack(e); };
  }
  auto r = dwd::solve_dw(p.polytope, *p.oracle, p.c, opts);
  return {std::move(r.combination), r.iterations};
}

int cmd_solve(const SolveArgs& args) {
  const auto file = dwd::io::load_instance(args.instance);
  if (std::holds_alternative<dwd::io::PointFile>(file)) {
    throw dwd::io::ParseError("point files are solved with decompose-point");
  }
  const bool auction = std::holds_alternative<dwd::io::AuctionFile>(file);
  const dwd::io::BaseInstance base =
      auction ? dwd::io::BaseInstance(std::get<dwd::io::AuctionFile>(file))
              : dwd::io::BaseInstance(std::get<dwd::io::PolytopeFile>(file));
  const double beta = args.beta.value_or(auction ? 2.0 : 1.0);

  Problem p;
  if (auction) {
    const auto lp = dwd::build_lp(std::get<dwd::io::AuctionFile>(file).instance);
    p.polytope = dwd::scale_polytope(lp.polytope(), beta);
    p.c = lp.c;
  } else {
    const auto& raw = std::get<dwd::io::PolytopeFile>(file);
    p.polytope = dwd::scale_polytope(raw.polytope, beta);
    p.c = raw.c;
  }
  p.oracle = dwd::make_packing_oracle(base_oracle(base, args.oracle));
  p.coords = dwd::io::Coordinates::of(base);

  const auto [combo, iterations] = run_method(p, args);
  dwd::io::ResultInfo info{args.method, auction ? "auction" : "polytope", beta, iterations,
                           std::nullopt};
  write_result(dwd::io::result_json(combo, info, p.coords), args.out);
  return kExitOk;
}

int cmd_decompose_point(const SolveArgs& args) {
  const auto file = dwd::io::load_instance(args.instance);
  const auto* point = std::get_if<dwd::io::PointFile>(&file);
  if (!point) throw dwd::io::ParseError("decompose-point needs a file of kind \"point\"");

  const auto problem = dwd::setup_point_decomposition(point->x_star);
  Problem p;
  p.polytope = problem.polytope;
  p.c = problem.cost;
  p.oracle = dwd::make_packing_oracle(base_oracle(point->base, args.oracle));
  p.coords = dwd::io::Coordinates::of(point->base);

  const auto [combo, iterations] = run_method(p, args);
  const double err = dwd::reconstruction_error(combo, point->x_star);
  dwd::io::ResultInfo info{args.method, "point", 1.0, iterations, err};
  write_result(dwd::io::result_json(combo, info, p.coords), args.out);
  if (err > kReconstructionLimit) {
    std::cerr << "error: decomposition misses x* by " << err
              << "; the oracle does not dominate x* (is x* inside the integer hull?)\n";
    return kExitReconstruction;
  }
  return kExitOk;
}

int cmd_generate(std::size_t players, std::size_t units, std::uint64_t seed,
                 const std::string& out) {
  dwd::AuctionInstance inst;
  try {
    inst = dwd::generate_instance(players, units, seed);
  } catch (const dwd::SolverError& e) {
    throw dwd::io::ParseError(e.what());
  }
  write_result(dwd::io::to_json(inst), out);
  return kExitOk;
}

int cmd_check(const std::string& instance, const std::string& result_path,
              std::optional<double> beta) {
  const auto file = dwd::io::load_instance(instance);
  std::ifstream in(result_path);
  if (!in) throw dwd::io::ParseError("cannot open " + result_path);
  Json result;
  try {
    result = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw dwd::io::ParseError(result_path + ": " + e.what());
  }
  const auto report = dwd::io::check_result(file, result, beta);
  for (const auto& f : report.failures) std::cerr << "FAIL: " << f << '\n';
  std::cout << (report.ok() ? "ok" : "failed") << ": weight sum "
            << dwd::io::format_number(report.weight_sum) << ", max violation "
            << report.max_violation << '\n';
  return report.ok() ? kExitOk : kExitReconstruction;
}

void add_solver_flags(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("--method", args.method, "dw or benders")
      ->check(CLI::IsMember({"dw", "benders"}));
  cmd->add_option("--tol", args.tol, "optimality tolerance on reduced costs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", args.max_iters, "oracle call limit");
  cmd->add_flag("--trace", args.trace, "print per-iteration tableaus to stderr");
  cmd->add_option("--oracle", args.oracle, "exact-dp or greedy")
      ->check(CLI::IsMember({"exact-dp", "greedy"}));
  cmd->add_option("--out", args.out, "write the result here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal fractional points and their convex decompositions into integer points"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an auction or polytope instance");
  solve->add_option("instance", solve_args.instance, "instance JSON file")->required();
  solve->add_option("--beta", solve_args.beta,
                    "scale b by 1/beta (default 2 for auctions, 1 for polytopes)");
  add_solver_flags(solve, solve_args);

  SolveArgs point_args;
  auto* point = app.add_subcommand("decompose-point", "decompose a given fractional point");
  point->add_option("point_file", point_args.instance, "point JSON file")->required();
  add_solver_flags(point, point_args);

  std::size_t players = 0;
  std::size_t units = 0;
  std::uint64_t seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "write a random multi-unit auction");
  gen->add_option("--players", players)->required();
  gen->add_option("--units", units)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", gen_out, "write the instance here instead of stdout");

  std::string check_instance;
  std::string check_result;
  std::optional<double> check_beta;
  auto* check = app.add_subcommand("check", "verify a result file against its instance");
  check->add_option("instance", check_instance)->required();
  check->add_option("result", check_result)->required();
  check->add_option("--beta", check_beta, "override the beta stored in the result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*point) return cmd_decompose_point(point_args);
    if (*gen) return cmd_generate(players, units, seed, gen_out);
    if (*check) return cmd_check(check_instance, check_result, check_beta);
  } catch (const dwd::io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const dwd::SolverError& e) {
    std::cerr << "error: " << dwd::to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == dwd::ErrorKind::kInvalidBeta ? kExitInput : kExitSolver;
  }
  return kExitInput;
}
