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

// Qubit-timeline machinery shared by the elementary-gate and ZZ-block levels.
// Operations are reduced to their qubit footprint (OpShape); everything here is
// independent of what the operations actually are.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "qreorder/error.hpp"

namespace qreorder {

struct OpShape {
  std::vector<int> qubits;
  bool fence = false;   // barrier: orders its qubits, occupies no layer
  bool marked = false;  // counted by reachability (erroneous gate / ZZ block)
};

/// ASAP layering of an operation sequence plus per-qubit adjacency.
///
/// A non-fence op lands one layer after the latest op on any of its qubits.
/// A fence sits at the earliest layer boundary after all its qubits are free
/// and pushes every later op on those qubits to that boundary or beyond; its
/// layer() is that boundary. Depth counts layers that hold a non-fence op.
class Timeline {
 public:
  Timeline() = default;

  Timeline(std::span<const OpShape> ops, int num_qubits) : num_qubits_(num_qubits) {
    const std::size_t n = ops.size();
    layer_.assign(n, 0);
    next_.resize(n);
    fences_.assign(static_cast<std::size_t>(num_qubits), {});
    std::vector<int> next_free(static_cast<std::size_t>(num_qubits), 0);
    std::vector<int> last(static_cast<std::size_t>(num_qubits), -1);
    for (std::size_t i = 0; i < n; ++i) {
      const auto &op = ops[i];
      next_[i].assign(op.qubits.size(), -1);
      int at = 0;
      for (int q : op.qubits) {
        assert(q >= 0 && q < num_qubits);
        at = std::max(at, next_free[static_cast<std::size_t>(q)]);
      }
      layer_[i] = at;
      for (int q : op.qubits) {
        auto uq = static_cast<std::size_t>(q);
        next_free[uq] = op.fence ? at : at + 1;
        if (op.fence) fences_[uq].push_back(at);
        if (last[uq] >= 0) {
          const auto &prev = ops[static_cast<std::size_t>(last[uq])];
          auto slot = std::find(prev.qubits.begin(), prev.qubits.end(), q) - prev.qubits.begin();
          next_[static_cast<std::size_t>(last[uq])][static_cast<std::size_t>(slot)] = static_cast<int>(i);
        }
        last[uq] = static_cast<int>(i);
      }
      if (!op.fence) depth_ = std::max(depth_, at + 1);
    }
    layers_.assign(static_cast<std::size_t>(depth_), {});
    occupant_.assign(static_cast<std::size_t>(depth_) * static_cast<std::size_t>(num_qubits), -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (ops[i].fence) continue;
      layers_[static_cast<std::size_t>(layer_[i])].push_back(static_cast<int>(i));
      for (int q : ops[i].qubits) occupant_[cell(layer_[i], q)] = static_cast<int>(i);
    }
  }

  int num_qubits() const { return num_qubits_; }
  int depth() const { return depth_; }
  int layer(std::size_t op) const { return layer_[op]; }
  const std::vector<int> &layer_indices() const { return layer_; }
  /// Non-fence ops of each layer, ascending by index.
  const std::vector<std::vector<int>> &layers() const { return layers_; }

  /// Next op after `op` on the qubit in slot `slot` of its footprint, or -1.
  int next_in_slot(std::size_t op, std::size_t slot) const { return next_[op][slot]; }
  const std::vector<int> &next_ops(std::size_t op) const { return next_[op]; }

  /// Op occupying (layer, qubit), or -1. Fences never occupy.
  int occupant(int layer, int qubit) const {
    if (layer < 0 || layer >= depth_) return -1;
    return occupant_[cell(layer, qubit)];
  }

  /// No non-fence op on `qubit` in layers [first, last].
  bool idle(int qubit, int first, int last) const {
    for (int l = first; l <= last; ++l) {
      if (occupant(l, qubit) >= 0) return false;
    }
    return true;
  }

  /// Some fence on `qubit` sits at a boundary in (lo, hi].
  bool fence_within(int qubit, int lo, int hi) const {
    for (int p : fences_[static_cast<std::size_t>(qubit)]) {
      if (p > lo && p <= hi) return true;
    }
    return false;
  }

 private:
  std::size_t cell(int layer, int qubit) const {
    return static_cast<std::size_t>(layer) * static_cast<std::size_t>(num_qubits_) + static_cast<std::size_t>(qubit);
  }

  int num_qubits_ = 0;
  int depth_ = 0;
  std::vector<int> layer_;
  std::vector<std::vector<int>> next_;
  std::vector<std::vector<int>> layers_;
  std::vector<int> occupant_;
  std::vector<std::vector<int>> fences_;
};

inline std::vector<int> shared_qubits(const OpShape &a, const OpShape &b) {
  std::vector<int> out;
  for (int q : a.qubits) {
    if (std::find(b.qubits.begin(), b.qubits.end(), q) != b.qubits.end()) out.push_back(q);
  }
  return out;
}

/// True iff `second` follows `first` immediately on at least one shared qubit.
inline bool is_immediate_dependent(std::span<const OpShape> ops, const Timeline &tl, std::size_t first,
                                   std::size_t second) {
  const auto &nx = tl.next_ops(first);
  (void)ops;
  return std::find(nx.begin(), nx.end(), static_cast<int>(second)) != nx.end();
}

/// Occupancy part of the depth-preservation test for exchanging `first`
/// (layer t) with its immediate dependent `second` (layer t+k):
///  - `second` directly follows `first` on every shared qubit;
///  - the other qubits of `first` are idle in (t, t+k];
///  - the other qubits of `second` are idle in [t, t+k);
///  - no fence on a moved qubit lies between the two positions.
inline bool exchange_fits_layers(std::span<const OpShape> ops, const Timeline &tl, std::size_t first,
                                 std::size_t second) {
  const auto &a = ops[first];
  const auto &b = ops[second];
  if (a.fence || b.fence) return false;
  const int t = tl.layer(first);
  const int tk = tl.layer(second);
  if (tk <= t) return false;
  const auto shared = shared_qubits(a, b);
  if (shared.empty()) return false;
  for (std::size_t s = 0; s < a.qubits.size(); ++s) {
    const int q = a.qubits[s];
    const bool is_shared = std::find(shared.begin(), shared.end(), q) != shared.end();
    if (is_shared) {
      if (tl.next_in_slot(first, s) != static_cast<int>(second)) return false;
    } else if (!tl.idle(q, t + 1, tk) || tl.fence_within(q, t, tk)) {
      return false;
    }
  }
  for (int q : b.qubits) {
    if (std::find(shared.begin(), shared.end(), q) != shared.end()) continue;
    if (!tl.idle(q, t, tk - 1) || tl.fence_within(q, t, tk)) return false;
  }
  return true;
}

/// New op order after exchanging `first` with its immediate dependent
/// `second` on their shared qubits. All other per-qubit sequences are kept;
/// the result is the topological order of the new qubit-sequence DAG that
/// prefers the lowest original index. Entry i of the result is the original
/// index of the op that moves to position i.
inline std::vector<std::size_t> exchanged_order(std::span<const OpShape> ops, int num_qubits, std::size_t first,
                                                std::size_t second) {
  const std::size_t n = ops.size();
  std::vector<std::vector<std::size_t>> wire(static_cast<std::size_t>(num_qubits));
  for (std::size_t i = 0; i < n; ++i) {
    for (int q : ops[i].qubits) wire[static_cast<std::size_t>(q)].push_back(i);
  }
  for (auto &seq : wire) {
    auto a = std::find(seq.begin(), seq.end(), first);
    if (a == seq.end()) continue;
    auto b = a + 1;
    if (b != seq.end() && *b == second) std::iter_swap(a, b);
  }
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto &seq : wire) {
    for (std::size_t k = 1; k < seq.size(); ++k) {
      succ[seq[k - 1]].push_back(seq[k]);
      ++indegree[seq[k]];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t s : succ[i]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (order.size() != n) throw InvariantViolation("exchange produced a cyclic qubit order");
  return order;
}

template <class T>
std::vector<T> permuted(const std::vector<T> &items, std::span<const std::size_t> order) {
  std::vector<T> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(items[i]);
  return out;
}

}  // namespace qreorder
