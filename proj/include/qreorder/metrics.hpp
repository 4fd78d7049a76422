// Copyright 2026 The qreorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qreorder/calibration.hpp"
#include "qreorder/circuit.hpp"
#include "qreorder/dependency_graph.hpp"
#include "qreorder/error.hpp"
#include "qreorder/maxcut.hpp"

namespace qreorder {

/// Outcome bitstring (rightmost character = clbit 0) -> shot count.
using Histogram = std::map<std::string, std::uint64_t>;

struct GateMetric {
  std::size_t id = 0;
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  int layer = 0;
  double error = 0.0;       // e_g
  std::size_t reach = 0;    // S_i
  double weight = 0.0;      // w_i = S_i / G
  double lambda = 0.0;      // w_i (e_g - min E_G)
};

struct MetricReport {
  double esp = 1.0;
  double wesp = 1.0;
  std::vector<GateMetric> per_gate;  // erroneous gates only, circuit order
  int depth = 0;
  std::size_t erroneous_gates = 0;   // G
  std::size_t measured_qubits = 0;   // Q
  double min_error = 0.0;            // min E_G (0 when G = 0)
  double readout_factor = 1.0;       // prod over measured qubits of (1 - e_m)
};

/// prod over measured qubits of (1 - e_m).
inline double readout_factor(const Circuit &c, const CalibrationData &cal) {
  double f = 1.0;
  for (int q : measured_qubits(c)) f *= 1.0 - cal.qubit(q).readout_error;
  return f;
}

inline double esp(const Circuit &c, const CalibrationData &cal) {
  check_coverage(c, cal);
  double p = readout_factor(c, cal);
  for (const auto &g : c.gates()) {
    if (is_erroneous(g.kind)) p *= 1.0 - gate_error(cal, g);
  }
  return p;
}

/// WESP over an arbitrary set of weighted terms:
///   prod_i (1 - min(1, e_i + lambda_i)) * readout,
///   lambda_i = (S_i / G) (e_i - min_j e_j).
/// Used for elementary gates and for ZZ blocks alike. Writes lambda_i to
/// `lambdas` when given.
inline double weighted_success(std::span<const double> errors, std::span<const std::size_t> reach,
                               double readout, std::vector<double> *lambdas = nullptr) {
  const std::size_t g = errors.size();
  if (lambdas) lambdas->assign(g, 0.0);
  if (g == 0) return readout;
  const double floor = *std::min_element(errors.begin(), errors.end());
  const double inv_g = 1.0 / static_cast<double>(g);
  double p = readout;
  for (std::size_t i = 0; i < g; ++i) {
    const double lambda = static_cast<double>(reach[i]) * inv_g * (errors[i] - floor);
    if (lambdas) (*lambdas)[i] = lambda;
    p *= 1.0 - std::min(1.0, errors[i] + lambda);
  }
  return p;
}

/// Per-gate calibrated errors aligned with the circuit (0 for non-erroneous).
inline std::vector<double> gate_errors(const Circuit &c, const CalibrationData &cal) {
  std::vector<double> e(c.size(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) e[i] = gate_error(cal, c.gate(i));
  return e;
}

/// WESP from a prebuilt dependency graph and aligned per-gate errors.
inline double wesp_value(const Circuit &c, const DependencyGraph &graph, std::span<const double> errors,
                         double readout) {
  std::vector<double> es;
  std::vector<std::size_t> reach;
  es.reserve(c.size());
  reach.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c.shapes()[i].marked) continue;
    es.push_back(errors[i]);
    reach.push_back(graph.reach_count(i));
  }
  return weighted_success(es, reach, readout);
}

inline MetricReport wesp(const Circuit &c, const CalibrationData &cal) {
  check_coverage(c, cal);
  MetricReport r;
  r.depth = c.depth();
  r.readout_factor = readout_factor(c, cal);
  r.measured_qubits = measured_qubits(c).size();
  r.esp = esp(c, cal);
  const auto graph = build_dependency_graph(c);
  std::vector<double> es;
  std::vector<std::size_t> reach;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate &g = c.gate(i);
    if (!is_erroneous(g.kind)) continue;
    GateMetric m{i, g.kind, g.qubits, c.layer_of(i), gate_error(cal, g), graph.reach_count(i)};
    es.push_back(m.error);
    reach.push_back(m.reach);
    r.per_gate.push_back(std::move(m));
  }
  r.erroneous_gates = r.per_gate.size();
  std::vector<double> lambdas;
  r.wesp = weighted_success(es, reach, r.readout_factor, &lambdas);
  if (!es.empty()) r.min_error = *std::min_element(es.begin(), es.end());
  for (std::size_t i = 0; i < r.per_gate.size(); ++i) {
    r.per_gate[i].weight = static_cast<double>(r.per_gate[i].reach) / static_cast<double>(r.erroneous_gates);
    r.per_gate[i].lambda = lambdas[i];
  }
  return r;
}

/// Fraction of shots that produced `expected`.
inline double pst(const Histogram &counts, std::string_view expected) {
  std::uint64_t total = 0;
  std::uint64_t hits = 0;
  for (const auto &[bits, n] : counts) {
    if (bits.size() != expected.size())
      throw InputError("outcome '" + bits + "' width differs from expected '" + std::string(expected) + "'");
    total += n;
    if (bits == expected) hits += n;
  }
  if (total == 0) throw InputError("pst: no trials");
  return static_cast<double>(hits) / static_cast<double>(total);
}

/// Mean sampled cut value divided by the maximum cut.
inline double approximation_ratio(const Histogram &counts, const MaxCutGraph &graph) {
  double weighted = 0.0;
  std::uint64_t total = 0;
  for (const auto &[bits, n] : counts) {
    weighted += static_cast<double>(n) * maxcut_cost(bits, graph);
    total += n;
  }
  if (total == 0) throw InputError("approximation ratio: empty counts");
  const double best = max_cost(graph);
  if (best <= 0.0) throw InputError("approximation ratio: maximum cut is zero");
  return weighted / static_cast<double>(total) / best;
}

/// Gap in percent between simulated and executed approximation ratio.
inline double approximation_ratio_gap(double ar_sim, double ar_exec) {
  if (!(ar_sim > 0.0)) throw InputError("approximation ratio gap: simulated AR must be positive");
  return (ar_sim - ar_exec) / ar_sim * 100.0;
}

}  // namespace qreorder
