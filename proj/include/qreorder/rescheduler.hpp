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

// WESP-guided gate rescheduling.
//
// The greedy pass walks the layers once. For every gate in the current layer
// it tries exchanging the gate with each immediate dependent that commutes
// with it and fits the layers without changing depth, scores each candidate
// circuit, and keeps the best one if it strictly beats the current score.
// The same driver runs on elementary gates and on ZZ blocks; the level is
// supplied as a ReschedulingProblem.

#include <chrono>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "qreorder/calibration.hpp"
#include "qreorder/circuit.hpp"
#include "qreorder/commutation.hpp"
#include "qreorder/dependency_graph.hpp"
#include "qreorder/error.hpp"
#include "qreorder/metrics.hpp"
#include "qreorder/schedule.hpp"

namespace qreorder {

/// One level of rescheduling: an op sequence that can score itself and
/// produce exchanged copies. Positions are reassigned on every exchange;
/// origins() maps each position back to the op's index in the pass input.
template <class P>
concept ReschedulingProblem = requires(const P &p, std::size_t a, std::size_t b) {
  { p.shapes() } -> std::convertible_to<std::span<const OpShape>>;
  { p.timeline() } -> std::convertible_to<const Timeline &>;
  { p.origins() } -> std::convertible_to<const std::vector<std::size_t> &>;
  { p.commutes(a, b) } -> std::same_as<bool>;
  { p.exchanged(a, b) } -> std::same_as<std::optional<P>>;
  { p.score() } -> std::same_as<double>;
  { p.state_key() } -> std::same_as<std::string>;
};

struct SweepStats {
  std::size_t swaps = 0;
  std::size_t candidates_scored = 0;
};

/// One pass over the layers. A gate moved into an earlier layer is not
/// revisited during the pass; a gate pushed into a later layer is seen
/// again when that layer comes up.
template <ReschedulingProblem P>
P greedy_sweep(P problem, SweepStats &stats) {
  const int depth = problem.timeline().depth();
  for (int layer = 0; layer < depth; ++layer) {
    std::vector<std::size_t> pending;
    for (int op : problem.timeline().layers()[static_cast<std::size_t>(layer)])
      pending.push_back(problem.origins()[static_cast<std::size_t>(op)]);

    for (std::size_t origin : pending) {
      const auto &origins = problem.origins();
      std::size_t pos = 0;
      while (pos < origins.size() && origins[pos] != origin) ++pos;
      if (pos == origins.size() || problem.timeline().layer(pos) != layer) continue;

      std::vector<int> dependents = problem.timeline().next_ops(pos);
      std::sort(dependents.begin(), dependents.end());
      dependents.erase(std::unique(dependents.begin(), dependents.end()), dependents.end());

      std::optional<P> best;
      double best_score = problem.score();
      for (int d : dependents) {
        if (d < 0) continue;
        const auto next = static_cast<std::size_t>(d);
        if (problem.shapes()[next].fence || !problem.commutes(pos, next)) continue;
        auto candidate = problem.exchanged(pos, next);
        if (!candidate) continue;
        ++stats.candidates_scored;
        if (candidate->score() > best_score) {
          best_score = candidate->score();
          best = std::move(candidate);
        }
      }
      if (best) {
        problem = std::move(*best);
        ++stats.swaps;
      }
    }
  }
  return problem;
}

/// Runs up to `sweeps` passes, stopping early once a pass changes nothing.
template <ReschedulingProblem P>
P greedy_reschedule(P problem, std::size_t sweeps, SweepStats &stats) {
  for (std::size_t s = 0; s < sweeps; ++s) {
    const std::size_t before = stats.swaps;
    problem = greedy_sweep(std::move(problem), stats);
    if (stats.swaps == before) break;
  }
  return problem;
}

template <ReschedulingProblem P>
struct Enumeration {
  P best;
  std::size_t schedules = 0;
};

/// Breadth-first enumeration of every schedule reachable through legal
/// exchanges. Returns the highest-scoring one; ties go to the schedule whose
/// origin sequence is lexicographically smallest.
template <ReschedulingProblem P>
Enumeration<P> enumerate_schedules(const P &start, std::size_t limit) {
  std::map<std::string, bool> seen;
  std::queue<P> frontier;
  seen.emplace(start.state_key(), true);
  frontier.push(start);
  Enumeration<P> out{start, 1};
  while (!frontier.empty()) {
    P cur = std::move(frontier.front());
    frontier.pop();
    if (cur.score() > out.best.score() || (cur.score() == out.best.score() && cur.origins() < out.best.origins()))
      out.best = cur;
    const auto shapes = cur.shapes();
    for (std::size_t a = 0; a < shapes.size(); ++a) {
      if (shapes[a].fence) continue;
      for (int d : cur.timeline().next_ops(a)) {
        if (d < 0 || shapes[static_cast<std::size_t>(d)].fence) continue;
        const auto b = static_cast<std::size_t>(d);
        if (!cur.commutes(a, b)) continue;
        auto next = cur.exchanged(a, b);
        if (!next) continue;
        if (!seen.emplace(next->state_key(), true).second) continue;
        out.schedules = seen.size();
        if (out.schedules > limit) throw LimitExceededError(limit, out.schedules);
        frontier.push(std::move(*next));
      }
    }
  }
  out.schedules = seen.size();
  return out;
}

/// Canonical text of per-qubit operation sequences; two circuits with the
/// same key are the same schedule.
inline std::string wire_key(const Circuit &c) {
  std::vector<std::string> wires(static_cast<std::size_t>(c.num_qubits()));
  for (const auto &g : c.gates()) {
    std::string token = describe(g);
    if (g.kind == GateKind::RZ) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%a", g.angle);
      token += buf;
    }
    if (g.clbit) token += "->" + std::to_string(*g.clbit);
    for (int q : g.qubits) wires[static_cast<std::size_t>(q)] += token + ";";
  }
  std::string key;
  for (const auto &w : wires) key += w + "|";
  return key;
}

/// Elementary-gate level: gates of a mapped circuit scored by WESP.
class ElementaryProblem {
 public:
  ElementaryProblem(Circuit circuit, const CalibrationData &cal)
      : circuit_(std::move(circuit)), errors_(gate_errors(circuit_, cal)), readout_(readout_factor(circuit_, cal)) {
    origins_.resize(circuit_.size());
    for (std::size_t i = 0; i < origins_.size(); ++i) origins_[i] = i;
    rescore();
  }

  std::span<const OpShape> shapes() const { return circuit_.shapes(); }
  const Timeline &timeline() const { return circuit_.timeline(); }
  const std::vector<std::size_t> &origins() const { return origins_; }
  const Circuit &circuit() const { return circuit_; }
  double score() const { return score_; }
  std::string state_key() const { return wire_key(circuit_); }

  bool commutes(std::size_t a, std::size_t b) const { return gates_commute(circuit_.gate(a), circuit_.gate(b)); }

  std::optional<ElementaryProblem> exchanged(std::size_t a, std::size_t b) const {
    if (!exchange_fits_layers(circuit_.shapes(), circuit_.timeline(), a, b)) return std::nullopt;
    const auto order = exchanged_order(circuit_.shapes(), circuit_.num_qubits(), a, b);
    Circuit next = circuit_.with_gates(permuted(circuit_.gates(), order));
    if (next.depth() != circuit_.depth()) return std::nullopt;
    ElementaryProblem out(*this);
    out.circuit_ = std::move(next);
    out.errors_ = permuted(errors_, order);
    out.origins_ = permuted(origins_, order);
    out.rescore();
    return out;
  }

 private:
  void rescore() {
    const DependencyGraph graph = build_dependency_graph(circuit_);
    score_ = wesp_value(circuit_, graph, errors_, readout_);
  }

  Circuit circuit_;
  std::vector<double> errors_;
  double readout_ = 1.0;
  std::vector<std::size_t> origins_;
  double score_ = 0.0;
};

/// Per-stage summary; the combined pass reports one stage per level.
struct StageResult {
  std::string level;  // "elementary" or "zz"
  std::size_t swaps = 0;
  double wesp_before = 1.0;  // score at this stage's own level
  double wesp_after = 1.0;
};

struct RescheduleResult {
  Circuit circuit;
  std::size_t swaps = 0;     // R
  double wesp_before = 1.0;  // at the level that was optimized
  double wesp_after = 1.0;
  double elapsed_ms = 0.0;
  std::size_t schedules_enumerated = 0;  // exhaustive search only
  std::vector<StageResult> stages;
};

struct RescheduleOptions {
  std::size_t sweeps = 1;
};

namespace detail {
inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}
}  // namespace detail

inline RescheduleResult reschedule_elementary(const Circuit &circuit, const CalibrationData &cal,
                                              RescheduleOptions options = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  check_coverage(circuit, cal);
  ElementaryProblem start(circuit, cal);
  SweepStats stats;
  ElementaryProblem done = greedy_reschedule(start, options.sweeps, stats);
  RescheduleResult r;
  r.circuit = done.circuit();
  r.swaps = stats.swaps;
  r.wesp_before = start.score();
  r.wesp_after = done.score();
  r.stages.push_back({"elementary", r.swaps, r.wesp_before, r.wesp_after});
  r.elapsed_ms = detail::ms_since(t0);
  return r;
}

/// Highest-WESP schedule among all depth-preserving exchange sequences.
/// Throws LimitExceededError once more than `schedule_limit` are found.
inline RescheduleResult exhaustive_reschedule(const Circuit &circuit, const CalibrationData &cal,
                                              std::size_t schedule_limit) {
  const auto t0 = std::chrono::steady_clock::now();
  check_coverage(circuit, cal);
  ElementaryProblem start(circuit, cal);
  auto found = enumerate_schedules(start, schedule_limit);
  RescheduleResult r;
  r.circuit = found.best.circuit();
  r.wesp_before = start.score();
  r.wesp_after = found.best.score();
  r.schedules_enumerated = found.schedules;
  r.stages.push_back({"exhaustive", 0, r.wesp_before, r.wesp_after});
  r.elapsed_ms = detail::ms_since(t0);
  return r;
}

}  // namespace qreorder
