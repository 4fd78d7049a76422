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
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qreorder/circuit.hpp"
#include "qreorder/error.hpp"
#include "qreorder/schedule.hpp"

namespace qreorder {

/// Gate dependency DAG of an op sequence.
///
/// Edges are immediate qubit-sharing dependencies, barriers included as
/// nodes. Reachability is computed through barriers qubit by qubit: a barrier
/// orders its qubits but does not carry errors from one of its qubits to
/// another, so a gate only reaches what follows it on wires it can actually
/// propagate along.
class DependencyGraph {
 public:
  DependencyGraph() = default;

  DependencyGraph(std::span<const OpShape> ops, const Timeline &tl) {
    const std::size_t n = ops.size();
    words_ = (n + 63) / 64;
    successors_.resize(n);
    levels_ = tl.layer_indices();
    marked_.assign(words_, 0);
    fence_.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (ops[i].marked) marked_[i / 64] |= std::uint64_t{1} << (i % 64);
      fence_[i] = ops[i].fence;
      auto &succ = successors_[i];
      for (int s : tl.next_ops(i)) {
        if (s >= 0) succ.push_back(s);
      }
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }

    reach_.assign(n * words_, 0);
    counts_.assign(n, 0);
    for (std::size_t idx = n; idx-- > 0;) {
      std::uint64_t *row = &reach_[idx * words_];
      for (std::size_t slot = 0; slot < ops[idx].qubits.size(); ++slot) {
        int s = tl.next_in_slot(idx, slot);
        const int q = ops[idx].qubits[slot];
        while (s >= 0 && ops[static_cast<std::size_t>(s)].fence) {
          const auto &fq = ops[static_cast<std::size_t>(s)].qubits;
          auto fs = static_cast<std::size_t>(std::find(fq.begin(), fq.end(), q) - fq.begin());
          s = tl.next_in_slot(static_cast<std::size_t>(s), fs);
        }
        if (s < 0) continue;
        const auto us = static_cast<std::size_t>(s);
        const std::uint64_t *other = &reach_[us * words_];
        for (std::size_t w = 0; w < words_; ++w) row[w] |= other[w];
        row[us / 64] |= std::uint64_t{1} << (us % 64);
      }
      std::size_t c = 0;
      for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(row[w] & marked_[w]));
      counts_[idx] = c;
    }
  }

  std::size_t size() const { return successors_.size(); }
  bool contains(std::size_t id) const { return id < size(); }

  /// Immediate dependents, ascending; may include barrier nodes.
  const std::vector<int> &successors(std::size_t id) const { return successors_[id]; }
  int level(std::size_t id) const { return levels_[id]; }
  const std::vector<int> &levels() const { return levels_; }
  bool is_fence(std::size_t id) const { return fence_[id]; }

  /// S_i: marked (erroneous) ops reachable from `id`, excluding itself.
  std::size_t reach_count(std::size_t id) const { return counts_[id]; }
  const std::vector<std::size_t> &reach_counts() const { return counts_; }

  bool reaches(std::size_t from, std::size_t to) const {
    return (reach_[from * words_ + to / 64] >> (to % 64)) & 1U;
  }

  /// Every non-barrier op reachable from `id`, ascending.
  std::vector<std::size_t> reachable(std::size_t id) const {
    std::vector<std::size_t> out;
    for (std::size_t j = id + 1; j < size(); ++j) {
      if (reaches(id, j)) out.push_back(j);
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto &s : successors_) e += s.size();
    return e;
  }

 private:
  std::size_t words_ = 0;
  std::vector<std::vector<int>> successors_;
  std::vector<int> levels_;
  std::vector<std::uint64_t> marked_;
  std::vector<bool> fence_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::size_t> counts_;
};

inline DependencyGraph build_dependency_graph(const Circuit &c) { return DependencyGraph(c.shapes(), c.timeline()); }

namespace detail {
inline void require_node(const DependencyGraph &g, std::size_t id) {
  if (!g.contains(id)) throw InputError("unknown gate id " + std::to_string(id));
}
}  // namespace detail

inline std::size_t reachable_count(const DependencyGraph &g, std::size_t id) {
  detail::require_node(g, id);
  return g.reach_count(id);
}

inline std::vector<std::size_t> immediate_dependents(const DependencyGraph &g, std::size_t id) {
  detail::require_node(g, id);
  const auto &s = g.successors(id);
  return {s.begin(), s.end()};
}

/// Output qubits a fault on gate `id` can reach: its own qubits plus those of
/// every gate reachable from it.
inline std::vector<int> propagation_footprint(const Circuit &c, const DependencyGraph &g, std::size_t id) {
  detail::require_node(g, id);
  std::vector<bool> hit(static_cast<std::size_t>(c.num_qubits()), false);
  for (int q : c.gate(id).qubits) hit[static_cast<std::size_t>(q)] = true;
  for (std::size_t j : g.reachable(id)) {
    for (int q : c.gate(j).qubits) hit[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> out;
  for (int q = 0; q < c.num_qubits(); ++q) {
    if (hit[static_cast<std::size_t>(q)]) out.push_back(q);
  }
  return out;
}

inline std::vector<int> propagation_footprint(const Circuit &c, std::size_t id) {
  return propagation_footprint(c, build_dependency_graph(c), id);
}

}  // namespace qreorder
