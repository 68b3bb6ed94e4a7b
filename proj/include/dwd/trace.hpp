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

// Plain-text traces of solver runs. DW traces print the revised-simplex
// tableau (row zero, basis inverse, right-hand side) before and after every
// pivot with three decimals.

#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "dwd/benders_solver.hpp"
#include "dwd/dw_solver.hpp"
#include "dwd/instance_file.hpp"

namespace dwd::io {

std::string format_number(double v);
std::string format_vector(std::span<const double> v);

struct EnteringColumn {
  std::string name;
  double reduced_cost = 0.0;
  std::span<const double> values;
};

void render_tableau(std::ostream& os, const MasterState& state,
                    const std::optional<EnteringColumn>& entering = std::nullopt);

class DwTraceRenderer {
 public:
  DwTraceRenderer(std::ostream& os, Coordinates coords)
      : os_(&os), coords_(std::move(coords)) {}

  void initial(const MasterState& state);
  void operator()(const DwIterationEvent& event);
  void slack(const SlackPivotEvent& event);

 private:
  std::ostream* os_;
  Coordinates coords_;
};

void render_benders_round(std::ostream& os, const BendersRoundEvent& event,
                          const Coordinates& coords);

}  // namespace dwd::io
