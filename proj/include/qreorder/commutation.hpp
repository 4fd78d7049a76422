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
#include <optional>
#include <string>
#include <vector>

#include "qreorder/circuit.hpp"
#include "qreorder/error.hpp"
#include "qreorder/schedule.hpp"
#include "qreorder/unitary.hpp"

namespace qreorder {

enum class Commutation { Yes, No, Unknown };

/// Fast table lookup. Unknown means "ask commute_by_matrix".
inline Commutation commute_by_rule(const Gate &a, const Gate &b) {
  if (!is_unitary(a.kind) || !is_unitary(b.kind)) return Commutation::No;
  const bool disjoint = std::none_of(a.qubits.begin(), a.qubits.end(), [&](int q) {
    return std::find(b.qubits.begin(), b.qubits.end(), q) != b.qubits.end();
  });
  if (disjoint) return Commutation::Yes;

  if (a.kind == GateKind::CX && b.kind == GateKind::CX) {
    const int ca = a.qubits[0], ta = a.qubits[1], cb = b.qubits[0], tb = b.qubits[1];
    if (ca == cb && ta != tb && ta != cb && tb != ca) return Commutation::Yes;
    if (ta == tb && ca != cb && ca != tb && cb != ta) return Commutation::Yes;
    return Commutation::Unknown;
  }
  if (a.kind == GateKind::CX || b.kind == GateKind::CX) {
    const Gate &cx = a.kind == GateKind::CX ? a : b;
    const Gate &one = a.kind == GateKind::CX ? b : a;
    const int q = one.qubits[0];
    if (one.kind == GateKind::RZ && q == cx.qubits[0]) return Commutation::Yes;
    if ((one.kind == GateKind::X || one.kind == GateKind::SX) && q == cx.qubits[1]) return Commutation::Yes;
    return Commutation::Unknown;
  }
  // Two single-qubit gates on the same qubit.
  if (a.kind == GateKind::RZ && b.kind == GateKind::RZ) return Commutation::Yes;
  if (a.kind == b.kind && a.angle == b.angle) return Commutation::Yes;
  return Commutation::Unknown;
}

/// U1 U2 == U2 U1 entrywise within `tol`, on the joint support (<= 3 qubits).
inline bool commute_by_matrix(const Gate &a, const Gate &b, double tol) {
  if (!is_unitary(a.kind) || !is_unitary(b.kind))
    throw InputError("commutation of non-unitary " + describe(a) + " / " + describe(b));
  std::vector<int> support = a.qubits;
  for (int q : b.qubits) {
    if (std::find(support.begin(), support.end(), q) == support.end()) support.push_back(q);
  }
  if (support.size() > 3) throw InputError("joint support larger than 3 qubits");
  const int top = *std::max_element(support.begin(), support.end());
  std::vector<int> wire(static_cast<std::size_t>(top) + 1, -1);
  for (std::size_t i = 0; i < support.size(); ++i) wire[static_cast<std::size_t>(support[i])] = static_cast<int>(i);
  const int n = static_cast<int>(support.size());
  const std::vector<Gate> ab{a, b};
  const std::vector<Gate> ba{b, a};
  return max_abs_difference(sequence_unitary(ab, n, wire), sequence_unitary(ba, n, wire)) <= tol;
}

/// Rule table first, matrix check for anything the table cannot decide.
inline bool gates_commute(const Gate &a, const Gate &b, double tol = 1e-12) {
  switch (commute_by_rule(a, b)) {
    case Commutation::Yes: return true;
    case Commutation::No: return false;
    case Commutation::Unknown: return commute_by_matrix(a, b, tol);
  }
  return false;
}

/// Circuit with gate `first` and its immediate dependent `second` exchanged,
/// provided the exchange fits the current layers and the relayered circuit
/// keeps the same depth. Does not check commutation.
inline std::optional<Circuit> try_exchange(const Circuit &c, std::size_t first, std::size_t second) {
  if (!exchange_fits_layers(c.shapes(), c.timeline(), first, second)) return std::nullopt;
  const auto order = exchanged_order(c.shapes(), c.num_qubits(), first, second);
  Circuit out = c.with_gates(permuted(c.gates(), order));
  if (out.depth() != c.depth()) return std::nullopt;
  return out;
}

inline bool can_swap_preserving_depth(const Circuit &c, std::size_t first, std::size_t second) {
  if (first >= c.size() || second >= c.size() ||
      !is_immediate_dependent(c.shapes(), c.timeline(), first, second))
    throw InputError("gate " + std::to_string(second) + " is not an immediate dependent of gate " +
                     std::to_string(first));
  return try_exchange(c, first, second).has_value();
}

struct SwapCandidate {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<int> shared_qubits;
  bool commutes = false;
  bool depth_safe = false;
};

inline SwapCandidate evaluate_swap(const Circuit &c, std::size_t first, std::size_t second) {
  SwapCandidate s;
  s.first = first;
  s.second = second;
  s.shared_qubits = shared_qubits(c.shapes()[first], c.shapes()[second]);
  s.depth_safe = can_swap_preserving_depth(c, first, second);
  s.commutes = gates_commute(c.gate(first), c.gate(second));
  return s;
}

}  // namespace qreorder
