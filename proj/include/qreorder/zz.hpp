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

// ZZ complex-gate rescheduling for QAOA-style circuits.
//
// Phase-separation gates are ZZ blocks tagged on the elementary circuit:
// cx(a,b), rz(theta) on b, cx(a,b), all carrying the same block id. Blocks
// are diagonal and commute with each other, so whole blocks may be exchanged
// when the block-level schedule allows it. Scoring uses WESP over blocks
// only, with each block's error estimated from its elementary gates.

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qreorder/calibration.hpp"
#include "qreorder/circuit.hpp"
#include "qreorder/dependency_graph.hpp"
#include "qreorder/error.hpp"
#include "qreorder/metrics.hpp"
#include "qreorder/rescheduler.hpp"
#include "qreorder/schedule.hpp"

namespace qreorder {

struct ZZBlock {
  int block_id = 0;
  int control = 0;
  int target = 0;
  double angle = 0.0;
  std::vector<std::size_t> elementary_ids;  // cx, rz, cx in circuit order
  double block_error = 0.0;
};

enum class BlockErrorRule {
  SuccessComplement,  // 1 - prod(1 - e)
  LiteralProduct,     // prod(e); kept for comparison only
};

inline double aggregate_block_error(std::span<const double> elementary, BlockErrorRule rule) {
  if (rule == BlockErrorRule::LiteralProduct) {
    double p = 1.0;
    for (double e : elementary) p *= e;
    return p;
  }
  double keep = 1.0;
  for (double e : elementary) keep *= 1.0 - e;
  return 1.0 - keep;
}

/// Collects the tagged blocks of `c` in order of first appearance and checks
/// their shape: exactly cx(a,b), rz on b, cx(a,b), adjacent on both qubits.
/// Every cx must belong to a block. Single scan plus per-block checks.
inline std::vector<ZZBlock> extract_blocks(const Circuit &c) {
  std::vector<ZZBlock> blocks;
  std::unordered_map<int, std::size_t> slot;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate &g = c.gate(i);
    if (!g.block_id) {
      if (g.kind == GateKind::CX) throw InputError("untagged cx at gate " + std::to_string(i));
      continue;
    }
    auto [it, fresh] = slot.emplace(*g.block_id, blocks.size());
    if (fresh) {
      ZZBlock b;
      b.block_id = *g.block_id;
      blocks.push_back(std::move(b));
    }
    blocks[it->second].elementary_ids.push_back(i);
  }
  for (auto &b : blocks) {
    const std::string where = "block " + std::to_string(b.block_id);
    const auto &ids = b.elementary_ids;
    if (ids.size() != 3) throw InputError(where + ": expected 3 elementary gates, found " + std::to_string(ids.size()));
    const Gate &first = c.gate(ids[0]);
    const Gate &mid = c.gate(ids[1]);
    const Gate &last = c.gate(ids[2]);
    if (first.kind != GateKind::CX || mid.kind != GateKind::RZ || last.kind != GateKind::CX ||
        first.qubits != last.qubits || mid.qubits[0] != first.qubits[1])
      throw InputError(where + ": not a cx-rz-cx decomposition");
    b.control = first.qubits[0];
    b.target = first.qubits[1];
    b.angle = mid.angle;
    const auto &tl = c.timeline();
    if (tl.next_in_slot(ids[0], 1) != static_cast<int>(ids[1]) || tl.next_in_slot(ids[1], 0) != static_cast<int>(ids[2]) ||
        tl.next_in_slot(ids[0], 0) != static_cast<int>(ids[2]))
      throw InputError(where + ": elementary gates interleaved with other gates");
  }
  return blocks;
}

/// Look-ahead estimate of every block's error from the mapped circuit.
inline std::map<int, double> lookahead_block_errors(const Circuit &c, const CalibrationData &cal,
                                                    BlockErrorRule rule = BlockErrorRule::SuccessComplement) {
  std::map<int, double> out;
  for (const auto &b : extract_blocks(c)) {
    double es[3];
    for (std::size_t k = 0; k < 3; ++k) es[k] = gate_error(cal, c.gate(b.elementary_ids[k]));
    out[b.block_id] = aggregate_block_error(es, rule);
  }
  return out;
}

/// Block-level view: each ZZ block is one op on {control, target}; every
/// other gate is an op of its own. Only blocks are scored and only pairs of
/// blocks are exchanged.
class ZZProblem {
 public:
  ZZProblem(const Circuit &c, const CalibrationData &cal, BlockErrorRule rule = BlockErrorRule::SuccessComplement)
      : num_qubits_(c.num_qubits()), num_clbits_(c.num_clbits()), readout_(readout_factor(c, cal)),
        elementary_depth_(c.depth()) {
    const auto blocks = extract_blocks(c);
    const auto errors = lookahead_block_errors(c, cal, rule);
    std::unordered_map<int, std::size_t> op_of_block;
    for (const auto &g : c.gates()) {
      if (g.block_id) {
        auto it = op_of_block.find(*g.block_id);
        if (it != op_of_block.end()) {
          ops_[it->second].gates.push_back(g);
          continue;
        }
        op_of_block.emplace(*g.block_id, ops_.size());
        ops_.push_back({true, *g.block_id, {g}});
        continue;
      }
      ops_.push_back({false, -1, {g}});
    }
    errors_.assign(ops_.size(), 0.0);
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].is_block) errors_[i] = errors.at(ops_[i].block_id);
    }
    origins_.resize(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) origins_[i] = i;
    rebuild();
  }

  std::span<const OpShape> shapes() const { return shapes_; }
  const Timeline &timeline() const { return timeline_; }
  const std::vector<std::size_t> &origins() const { return origins_; }
  double score() const { return score_; }
  int block_depth() const { return timeline_.depth(); }

  std::string state_key() const {
    std::vector<std::string> wires(static_cast<std::size_t>(num_qubits_));
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const std::string token =
          ops_[i].is_block ? "zz" + std::to_string(ops_[i].block_id) : describe(ops_[i].gates.front());
      for (int q : shapes_[i].qubits) wires[static_cast<std::size_t>(q)] += token + ";";
    }
    std::string key;
    for (const auto &w : wires) key += w + "|";
    return key;
  }

  bool commutes(std::size_t a, std::size_t b) const { return ops_[a].is_block && ops_[b].is_block; }

  std::optional<ZZProblem> exchanged(std::size_t a, std::size_t b) const {
    if (!commutes(a, b) || !exchange_fits_layers(shapes_, timeline_, a, b)) return std::nullopt;
    const auto order = exchanged_order(shapes_, num_qubits_, a, b);
    ZZProblem out(*this);
    out.ops_ = permuted(ops_, order);
    out.errors_ = permuted(errors_, order);
    out.origins_ = permuted(origins_, order);
    out.rebuild();
    if (out.block_depth() != block_depth() || out.circuit().depth() != elementary_depth_) return std::nullopt;
    return out;
  }

  /// Elementary circuit with blocks in their current order.
  Circuit circuit() const {
    std::vector<Gate> gates;
    for (const auto &op : ops_) gates.insert(gates.end(), op.gates.begin(), op.gates.end());
    return Circuit(num_qubits_, num_clbits_, std::move(gates));
  }

  /// Block error per block op, in current op order.
  std::vector<double> block_errors() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].is_block) out.push_back(errors_[i]);
    }
    return out;
  }

  std::vector<int> block_order() const {
    std::vector<int> out;
    for (const auto &op : ops_) {
      if (op.is_block) out.push_back(op.block_id);
    }
    return out;
  }

 private:
  struct MacroOp {
    bool is_block = false;
    int block_id = -1;
    std::vector<Gate> gates;
  };

  void rebuild() {
    shapes_.clear();
    shapes_.reserve(ops_.size());
    for (const auto &op : ops_) {
      if (op.is_block) {
        const Gate &cx = op.gates.front();
        shapes_.push_back({cx.qubits, false, true});
      } else {
        const Gate &g = op.gates.front();
        shapes_.push_back({g.qubits, g.kind == GateKind::Barrier, false});
      }
    }
    timeline_ = Timeline(shapes_, num_qubits_);
    const DependencyGraph graph(shapes_, timeline_);
    std::vector<double> es;
    std::vector<std::size_t> reach;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (!ops_[i].is_block) continue;
      es.push_back(errors_[i]);
      reach.push_back(graph.reach_count(i));
    }
    score_ = weighted_success(es, reach, readout_);
  }

  int num_qubits_ = 0;
  int num_clbits_ = 0;
  double readout_ = 1.0;
  int elementary_depth_ = 0;
  std::vector<MacroOp> ops_;
  std::vector<double> errors_;
  std::vector<std::size_t> origins_;
  std::vector<OpShape> shapes_;
  Timeline timeline_;
  double score_ = 1.0;
};

struct ZZOptions {
  std::size_t sweeps = 1;
  BlockErrorRule rule = BlockErrorRule::SuccessComplement;
};

/// Block-level greedy pass. wesp_before/after are block-level scores.
inline RescheduleResult reschedule_zz(const Circuit &circuit, const CalibrationData &cal, ZZOptions options = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  check_coverage(circuit, cal);
  ZZProblem start(circuit, cal, options.rule);
  SweepStats stats;
  ZZProblem done = greedy_reschedule(start, options.sweeps, stats);
  RescheduleResult r;
  r.circuit = done.circuit();
  r.swaps = stats.swaps;
  r.wesp_before = start.score();
  r.wesp_after = done.score();
  r.stages.push_back({"zz", r.swaps, r.wesp_before, r.wesp_after});
  r.elapsed_ms = detail::ms_since(t0);
  return r;
}

/// ZZ-block pass followed by the elementary pass on the re-emitted circuit.
/// Top-level wesp_before/after are elementary-level WESP of input and output;
/// each stage reports its own level's scores.
inline RescheduleResult reschedule_combined(const Circuit &circuit, const CalibrationData &cal,
                                            ZZOptions zz_options = {}, RescheduleOptions options = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const RescheduleResult zz = reschedule_zz(circuit, cal, zz_options);
  const RescheduleResult elem = reschedule_elementary(zz.circuit, cal, options);
  RescheduleResult r;
  r.circuit = elem.circuit;
  r.swaps = zz.swaps + elem.swaps;
  r.wesp_before = wesp(circuit, cal).wesp;
  r.wesp_after = elem.wesp_after;
  r.stages = {zz.stages.front(), elem.stages.front()};
  r.elapsed_ms = detail::ms_since(t0);
  return r;
}

}  // namespace qreorder
