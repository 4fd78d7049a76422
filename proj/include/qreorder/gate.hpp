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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qreorder {

enum class GateKind { H, X, SX, RZ, CX, Measure, Barrier };

constexpr std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::Measure: return "measure";
    case GateKind::Barrier: return "barrier";
  }
  return "?";
}

constexpr bool is_unitary(GateKind kind) { return kind != GateKind::Measure && kind != GateKind::Barrier; }

/// Kinds that carry a nonzero calibrated error. rz is virtual, measure is
/// accounted for by readout error, barrier is not an operation.
constexpr bool is_erroneous(GateKind kind) {
  return kind == GateKind::H || kind == GateKind::X || kind == GateKind::SX || kind == GateKind::CX;
}

struct Gate {
  std::size_t id = 0;  // position in the owning circuit
  GateKind kind = GateKind::H;
  std::vector<int> qubits;  // cx: {control, target}
  double angle = 0.0;       // rz only, radians
  std::optional<int> clbit;  // measure only
  std::optional<int> block_id;

  static Gate make(GateKind kind, std::vector<int> qubits, double angle = 0.0, std::optional<int> clbit = {}) {
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.angle = angle;
    g.clbit = clbit;
    return g;
  }
  static Gate h(int q) { return make(GateKind::H, {q}); }
  static Gate x(int q) { return make(GateKind::X, {q}); }
  static Gate sx(int q) { return make(GateKind::SX, {q}); }
  static Gate rz(int q, double theta) { return make(GateKind::RZ, {q}, theta); }
  static Gate cx(int control, int target) { return make(GateKind::CX, {control, target}); }
  static Gate measure(int q, int c) { return make(GateKind::Measure, {q}, 0.0, c); }
  static Gate barrier(std::vector<int> qs) { return make(GateKind::Barrier, std::move(qs)); }

  Gate tagged(int block) const {
    Gate g = *this;
    g.block_id = block;
    return g;
  }

  /// Equality of what the gate does; ignores id and block tag.
  bool same_operation(const Gate &o) const {
    return kind == o.kind && qubits == o.qubits && angle == o.angle && clbit == o.clbit;
  }
};

/// "cx(0,1)", "rz(1.5708)(2)" style label for diagnostics and reports.
inline std::string describe(const Gate &g) {
  std::string s(gate_name(g.kind));
  if (g.kind == GateKind::RZ) s += "[" + std::to_string(g.angle) + "]";
  s += "(";
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.qubits[i]);
  }
  s += ")";
  return s;
}

}  // namespace qreorder
