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
#include <cstddef>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "qreorder/error.hpp"
#include "qreorder/gate.hpp"
#include "qreorder/schedule.hpp"

namespace qreorder {

/// Ordered gate list over a fixed qubit/clbit register, ASAP-layered on
/// construction. Immutable: transformations build a new Circuit.
class Circuit {
 public:
  Circuit() = default;

  Circuit(int num_qubits, int num_clbits, std::vector<Gate> gates)
      : num_qubits_(num_qubits), num_clbits_(num_clbits), gates_(std::move(gates)) {
    if (num_qubits < 0 || num_clbits < 0) throw InputError("negative register size");
    shapes_.reserve(gates_.size());
    for (std::size_t i = 0; i < gates_.size(); ++i) {
      auto &g = gates_[i];
      g.id = i;
      validate(g);
      shapes_.push_back({g.qubits, g.kind == GateKind::Barrier, is_erroneous(g.kind)});
    }
    timeline_ = Timeline(shapes_, num_qubits_);
  }

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate> &gates() const { return gates_; }
  const Gate &gate(std::size_t id) const { return gates_.at(id); }

  const Timeline &timeline() const { return timeline_; }
  std::span<const OpShape> shapes() const { return shapes_; }
  int layer_of(std::size_t id) const { return timeline_.layer(id); }
  /// Gate ids per layer; barriers are not layer occupants.
  const std::vector<std::vector<int>> &layers() const { return timeline_.layers(); }
  int depth() const { return timeline_.depth(); }

  Circuit with_gates(std::vector<Gate> gates) const { return Circuit(num_qubits_, num_clbits_, std::move(gates)); }

 private:
  void validate(const Gate &g) const {
    const std::string where = "gate " + std::to_string(g.id) + " " + describe(g);
    for (int q : g.qubits) {
      if (q < 0 || q >= num_qubits_) throw InputError(where + ": qubit out of range");
    }
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b) {
        if (g.qubits[a] == g.qubits[b]) throw InputError(where + ": repeated qubit");
      }
    }
    const std::size_t arity = g.qubits.size();
    switch (g.kind) {
      case GateKind::CX:
        if (arity != 2) throw InputError(where + ": cx needs two qubits");
        break;
      case GateKind::Barrier:
        if (arity == 0) throw InputError(where + ": empty barrier");
        break;
      case GateKind::Measure:
        if (arity != 1 || !g.clbit || *g.clbit < 0 || *g.clbit >= num_clbits_)
          throw InputError(where + ": measure needs one qubit and a declared clbit");
        break;
      default:
        if (arity != 1) throw InputError(where + ": single-qubit gate arity");
    }
    if (g.kind != GateKind::Measure && g.clbit) throw InputError(where + ": clbit on non-measure");
  }

  int num_qubits_ = 0;
  int num_clbits_ = 0;
  std::vector<Gate> gates_;
  std::vector<OpShape> shapes_;
  Timeline timeline_;
};

/// Layers are computed on construction, so this is a validated copy.
inline Circuit build_layers(const Circuit &c) { return c.with_gates(c.gates()); }

inline int depth(const Circuit &c) { return c.depth(); }

inline std::size_t gate_count(const Circuit &c, bool erroneous_only) {
  if (!erroneous_only) return c.size();
  return static_cast<std::size_t>(
      std::count_if(c.gates().begin(), c.gates().end(), [](const Gate &g) { return is_erroneous(g.kind); }));
}

/// Qubits that are measured at least once, ascending.
inline std::vector<int> measured_qubits(const Circuit &c) {
  std::vector<int> out;
  for (const auto &g : c.gates()) {
    if (g.kind == GateKind::Measure) out.push_back(g.qubits[0]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using OperationKey = std::tuple<int, std::vector<int>, double, int>;

inline OperationKey operation_key(const Gate &g) {
  return {static_cast<int>(g.kind), g.qubits, g.angle, g.clbit.value_or(-1)};
}

/// Sorted multiset of gate operations (ignores order, ids, and tags).
inline std::vector<OperationKey> operation_multiset(const Circuit &c) {
  std::vector<OperationKey> keys;
  keys.reserve(c.size());
  for (const auto &g : c.gates()) keys.push_back(operation_key(g));
  std::sort(keys.begin(), keys.end());
  return keys;
}

/// Gate-for-gate equality of operations in order.
inline bool same_gate_list(const Circuit &a, const Circuit &b) {
  if (a.num_qubits() != b.num_qubits() || a.num_clbits() != b.num_clbits() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.gate(i).same_operation(b.gate(i))) return false;
  }
  return true;
}

}  // namespace qreorder
