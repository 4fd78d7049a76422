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

#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qreorder/circuit.hpp"
#include "qreorder/error.hpp"
#include "qreorder/maxcut.hpp"

namespace qreorder {

struct QaoaSpec {
  MaxCutGraph graph;
  int p = 1;
  std::vector<double> gammas;
  std::vector<double> betas;

  void validate() const {
    graph.validate();
    if (p < 1) throw InputError("qaoa: p must be >= 1");
    if (gammas.size() != static_cast<std::size_t>(p) || betas.size() != static_cast<std::size_t>(p))
      throw InputError("qaoa: need exactly p gammas and p betas");
  }
};

/// rx(theta) in the {rz, sx} basis, equal to Rx(theta) up to global phase.
inline std::vector<Gate> rx_as_sx_rz(int q, double theta) {
  const double half_pi = std::numbers::pi / 2;
  return {Gate::rz(q, half_pi), Gate::sx(q), Gate::rz(q, theta + std::numbers::pi), Gate::sx(q),
          Gate::rz(q, half_pi)};
}

/// Max-Cut QAOA circuit on qubits 0..n-1 (node i on qubit i, measured into
/// clbit i). Per repetition r, each edge (u,v,w) becomes a ZZ block
/// cx(u,v) rz(2 gamma_r w)(v) cx(u,v) tagged with block id r*|E| + edge
/// index, followed by rx(2 beta_r) on every qubit. `coupling`, when given,
/// must contain every graph edge (no routing is done here).
inline Circuit build_qaoa(const QaoaSpec &spec, const std::optional<std::set<std::pair<int, int>>> &coupling = {}) {
  spec.validate();
  const auto &g = spec.graph;
  if (coupling) {
    for (const auto &e : g.edges) {
      if (!coupling->count(std::minmax(e.u, e.v)))
        throw InputError("qaoa: edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not coupled");
    }
  }
  std::vector<Gate> gates;
  for (int q = 0; q < g.n; ++q) gates.push_back(Gate::h(q));
  const int per_round = static_cast<int>(g.edges.size());
  for (int r = 0; r < spec.p; ++r) {
    const double gamma = spec.gammas[static_cast<std::size_t>(r)];
    for (int k = 0; k < per_round; ++k) {
      const auto &e = g.edges[static_cast<std::size_t>(k)];
      const int id = r * per_round + k;
      gates.push_back(Gate::cx(e.u, e.v).tagged(id));
      gates.push_back(Gate::rz(e.v, 2.0 * gamma * e.weight).tagged(id));
      gates.push_back(Gate::cx(e.u, e.v).tagged(id));
    }
    for (int q = 0; q < g.n; ++q) {
      for (auto &m : rx_as_sx_rz(q, 2.0 * spec.betas[static_cast<std::size_t>(r)])) gates.push_back(m);
    }
  }
  for (int q = 0; q < g.n; ++q) gates.push_back(Gate::measure(q, q));
  return Circuit(g.n, g.n, std::move(gates));
}

/// Expected cut value under an outcome distribution.
inline double expected_cut(const std::map<std::string, double> &distribution, const MaxCutGraph &g) {
  double total = 0.0;
  for (const auto &[bits, p] : distribution) total += p * maxcut_cost(bits, g);
  return total;
}

}  // namespace qreorder
