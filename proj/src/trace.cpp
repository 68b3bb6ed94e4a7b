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

#include "dwd/trace.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace dwd::io {

namespace {

constexpr int kCell = 9;
constexpr int kLabel = 9;

std::string pad_left(const std::string& s, int width) {
  return s.size() >= static_cast<std::size_t>(width)
             ? s
             : std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, int width) {
  return s.size() >= static_cast<std::size_t>(width)
             ? s
             : s + std::string(static_cast<std::size_t>(width) - s.size(), ' ');
}

std::string point_text(const IntegerPoint& p, const Coordinates& coords) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x(" + coords.key(i) + ")=" + std::to_string(p[i]);
  }
  return out.empty() ? "0" : out;
}

std::string rule(std::size_t cells, bool extra) {
  std::string s(kLabel, '-');
  s += "+" + std::string(cells * kCell, '-') + "+" + std::string(kCell, '-');
  if (extra) s += "+" + std::string(kCell, '-');
  return s;
}

}  // namespace

std::string format_number(double v) {
  if (std::abs(v) < 0.0005) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string format_vector(std::span<const double> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_number(v[i]);
  }
  return out + "]";
}

void render_tableau(std::ostream& os, const MasterState& state,
                    const std::optional<EnteringColumn>& entering) {
  const std::size_t n = state.rows();
  const bool extra = entering.has_value();
  const std::string title = "BASIS INVERSE";
  const int inner = static_cast<int>(n) * kCell;
  const int left = (inner - static_cast<int>(title.size())) / 2;
  std::string header = std::string(kLabel, ' ') + "|" +
                       pad_right(std::string(std::max(left, 0), ' ') + title, inner) + "|" +
                       pad_left("RHS", kCell);
  if (extra) header += "|" + pad_left(entering->name, kCell);
  os << header << '\n' << rule(n, extra) << '\n';

  std::string zrow = pad_right("z", kLabel) + "|";
  for (double v : state.dual_row) zrow += pad_left(format_number(v), kCell);
  zrow += "|" + pad_left(format_number(state.objective), kCell);
  if (extra) zrow += "|" + pad_left(format_number(entering->reduced_cost), kCell);
  os << zrow << '\n' << rule(n, extra) << '\n';

  for (std::size_t r = 0; r < n; ++r) {
    std::string line = pad_right(state.labels[r].name(), kLabel) + "|";
    for (double v : state.basis_inverse.row(r)) line += pad_left(format_number(v), kCell);
    line += "|" + pad_left(format_number(state.rhs[r]), kCell);
    if (extra) line += "|" + pad_left(format_number(entering->values[r]), kCell);
    os << line << '\n';
  }
}

void DwTraceRenderer::initial(const MasterState& state) {
  *os_ << "Initialization Step\n";
  render_tableau(*os_, state);
  *os_ << '\n';
}

void DwTraceRenderer::operator()(const DwIterationEvent& e) {
  std::ostream& os = *os_;
  const std::string x = e.entering_label ? "X" + std::to_string(e.entering_label->index()) : "X";
  os << "Iteration " << e.iteration << '\n';
  os << "SUBPROBLEM\n";
  os << "  w = " << format_vector(e.w) << "  alpha = " << format_number(e.alpha) << '\n';
  os << "  c + wA = " << format_vector(e.cost) << '\n';
  os << "  oracle point " << x << ": " << point_text(e.point, coords_) << '\n';
  os << "  z - c_hat = " << format_number(e.reduced_cost) << '\n';
  if (e.optimal) {
    os << "  no improving point: optimal, objective " << format_number(e.value) << "\n\n";
    return;
  }
  const std::string lambda = e.entering_label->name();
  os << "MASTER PROBLEM\n";
  os << "  A " << x << " = " << format_vector(e.ax) << '\n';
  os << "  y = " << format_vector(e.entering_column) << '\n';
  os << "  " << e.leaving_label->name() << " leaves the basis and " << lambda
     << " enters the basis\n";
  render_tableau(os, e.before, EnteringColumn{lambda, e.reduced_cost, e.entering_column});
  os << "After pivoting:\n";
  render_tableau(os, *e.after);
  os << "  objective = " << format_number(e.value) << "\n\n";
}

void DwTraceRenderer::slack(const SlackPivotEvent& e) {
  std::ostream& os = *os_;
  const std::string name = BasisLabel::slack(e.slack).name();
  os << "Slack pricing before iteration " << e.iteration << '\n';
  os << "  w[" << e.slack + 1 << "] = " << format_number(e.reduced_cost) << " > 0\n";
  os << "  " << e.leaving_label.name() << " leaves the basis and " << name
     << " enters the basis\n";
  render_tableau(os, e.before, EnteringColumn{name, e.reduced_cost, e.entering_column});
  os << "After pivoting:\n";
  render_tableau(os, e.after);
  os << "  objective = " << format_number(e.after.value()) << "\n\n";
}

void render_benders_round(std::ostream& os, const BendersRoundEvent& e,
                          const Coordinates& coords) {
  os << "Round " << e.round << ": z = " << format_number(e.z)
     << "  w = " << format_vector(e.w) << '\n';
  os << "  oracle point: " << point_text(e.point, coords) << '\n';
  os << "  slack = " << format_number(e.slack)
     << (e.added ? "  (violated, cut added)" : "  (no violated cut)") << '\n';
}

}  // namespace dwd::io
