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

// Statevector simulation, unitary equivalence, and stochastic Pauli noise
// sampling.
//
// Noise model: after every erroneous gate a fault fires with probability e_g;
// a firing fault applies an independently drawn non-identity Pauli to each
// qubit of the gate (for cx both qubits are hit). Readout flips each measured
// bit with probability e_m. Measurements are terminal.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qreorder/calibration.hpp"
#include "qreorder/circuit.hpp"
#include "qreorder/error.hpp"
#include "qreorder/metrics.hpp"
#include "qreorder/pauli.hpp"
#include "qreorder/unitary.hpp"

namespace qreorder {

struct SimConfig {
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  int qubit_limit = 14;
  int unitary_qubit_limit = 6;
  unsigned threads = 1;
  std::optional<Pauli> forced_pauli;  // test hook: every fault uses this Pauli
};

/// Pre-measurement state of `c` from |0...0>.
inline std::vector<cplx> statevector(const Circuit &c, int qubit_limit = 14) {
  if (c.num_qubits() > qubit_limit)
    throw InputError("statevector: " + std::to_string(c.num_qubits()) + " qubits exceeds limit " +
                     std::to_string(qubit_limit));
  std::vector<cplx> state(std::size_t{1} << c.num_qubits());
  state[0] = 1.0;
  for (const auto &g : c.gates()) apply_gate(state, g);
  return state;
}

inline DenseMatrix circuit_unitary(const Circuit &c, int qubit_limit = 6) {
  if (c.num_qubits() > qubit_limit)
    throw InputError("unitary: " + std::to_string(c.num_qubits()) + " qubits exceeds limit " +
                     std::to_string(qubit_limit));
  return sequence_unitary(c.gates(), c.num_qubits());
}

/// max |U2^dagger U1 - e^{i phi} I| with the best phase read off the diagonal.
inline double unitary_distance(const Circuit &a, const Circuit &b, int qubit_limit = 6) {
  if (a.num_qubits() != b.num_qubits()) throw InputError("unitary_equivalent: qubit counts differ");
  const DenseMatrix ua = circuit_unitary(a, qubit_limit);
  const DenseMatrix ub = circuit_unitary(b, qubit_limit);
  const std::size_t dim = ua.dim;
  DenseMatrix m{dim, std::vector<cplx>(dim * dim)};
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) acc += std::conj(ub.at(k, i)) * ua.at(k, j);
      m.at(i, j) = acc;
    }
  }
  cplx trace = 0.0;
  for (std::size_t i = 0; i < dim; ++i) trace += m.at(i, i);
  if (std::abs(trace) == 0.0) return 2.0;
  const cplx phase = trace / std::abs(trace);
  double worst = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) worst = std::max(worst, std::abs(m.at(i, j) - (i == j ? phase : 0.0)));
  }
  return worst;
}

/// Measures are ignored, so only the unitary parts are compared.
inline bool unitary_equivalent(const Circuit &a, const Circuit &b, double tol = 1e-10, int qubit_limit = 6) {
  return unitary_distance(a, b, qubit_limit) <= tol;
}

namespace sim_detail {

/// (qubit, clbit) pairs; rejects gates acting on a qubit after it is measured.
inline std::vector<std::pair<int, int>> terminal_measurements(const Circuit &c) {
  std::vector<std::pair<int, int>> out;
  std::vector<bool> done(static_cast<std::size_t>(c.num_qubits()), false);
  for (const auto &g : c.gates()) {
    if (g.kind == GateKind::Measure) {
      out.emplace_back(g.qubits[0], *g.clbit);
      done[static_cast<std::size_t>(g.qubits[0])] = true;
      continue;
    }
    if (g.kind == GateKind::Barrier) continue;
    for (int q : g.qubits) {
      if (done[static_cast<std::size_t>(q)])
        throw InputError("gate " + std::to_string(g.id) + " acts on a measured qubit (mid-circuit measurement)");
    }
  }
  return out;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream key of one shot. The seed is mixed first: a raw seed ^ shot maps
/// every seed below the shot count onto the same set of streams.
inline std::uint64_t shot_stream(std::uint64_t seed, std::uint64_t shot) { return splitmix64(seed) ^ shot; }

inline double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t sample_index(const std::vector<double> &cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
  return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

inline std::vector<double> cumulative(const std::vector<cplx> &state) {
  std::vector<double> cdf(state.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    acc += std::norm(state[i]);
    cdf[i] = acc;
  }
  return cdf;
}

inline std::string bitstring(std::uint64_t bits, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((bits >> i) & 1U) s[static_cast<std::size_t>(width - 1 - i)] = '1';
  }
  return s;
}

}  // namespace sim_detail

/// Exact outcome distribution of the measured clbits with no noise.
inline std::map<std::string, double> ideal_distribution(const Circuit &c, int qubit_limit = 14) {
  const auto meas = sim_detail::terminal_measurements(c);
  const auto state = statevector(c, qubit_limit);
  std::map<std::uint64_t, double> by_bits;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state[i]);
    if (p == 0.0) continue;
    std::uint64_t bits = 0;
    for (const auto &[q, cb] : meas) {
      if ((i >> q) & 1U) bits |= std::uint64_t{1} << cb;
      else bits &= ~(std::uint64_t{1} << cb);
    }
    by_bits[bits] += p;
  }
  std::map<std::string, double> out;
  for (const auto &[bits, p] : by_bits) out[sim_detail::bitstring(bits, c.num_clbits())] = p;
  return out;
}

/// Monte-Carlo sampling under the stochastic Pauli model. Shot s draws from
/// mt19937_64(splitmix64(seed) ^ s), so the histogram does not depend on
/// thread count.
inline Histogram sample_noisy(const Circuit &c, const CalibrationData &cal, const SimConfig &config) {
  if (config.shots < 1) throw InputError("shots must be >= 1");
  if (c.num_qubits() > config.qubit_limit)
    throw InputError("sample_noisy: " + std::to_string(c.num_qubits()) + " qubits exceeds limit " +
                     std::to_string(config.qubit_limit));
  check_coverage(c, cal);
  const auto meas = sim_detail::terminal_measurements(c);
  const auto errors = gate_errors(c, cal);
  std::vector<double> readout;
  for (const auto &m : meas) readout.push_back(cal.qubit(m.first).readout_error);

  const auto ideal = statevector(c, config.qubit_limit);
  const auto ideal_cdf = sim_detail::cumulative(ideal);

  auto run_shot = [&](std::uint64_t shot, std::vector<cplx> &scratch,
                      std::vector<std::pair<std::size_t, Pauli>> &faults) -> std::uint64_t {
    std::mt19937_64 rng(sim_detail::shot_stream(config.seed, shot));
    faults.clear();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!is_erroneous(c.gate(i).kind) || errors[i] <= 0.0) continue;
      if (sim_detail::uniform01(rng) >= errors[i]) continue;
      for (std::size_t k = 0; k < c.gate(i).qubits.size(); ++k) {
        const Pauli p = config.forced_pauli ? *config.forced_pauli : static_cast<Pauli>(1 + rng() % 3);
        faults.emplace_back(i * 4 + k, p);
      }
    }
    std::size_t outcome = 0;
    if (faults.empty()) {
      outcome = sim_detail::sample_index(ideal_cdf, sim_detail::uniform01(rng));
    } else {
      scratch.assign(ideal.size(), 0.0);
      scratch[0] = 1.0;
      std::size_t f = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate &g = c.gate(i);
        apply_gate(scratch, g);
        for (; f < faults.size() && faults[f].first / 4 == i; ++f) {
          apply_single(scratch, g.qubits[faults[f].first % 4], pauli_matrix(faults[f].second));
        }
      }
      outcome = sim_detail::sample_index(sim_detail::cumulative(scratch), sim_detail::uniform01(rng));
    }
    std::uint64_t bits = 0;
    for (std::size_t m = 0; m < meas.size(); ++m) {
      bool bit = (outcome >> meas[m].first) & 1U;
      if (readout[m] > 0.0 && sim_detail::uniform01(rng) < readout[m]) bit = !bit;
      const std::uint64_t mask = std::uint64_t{1} << meas[m].second;
      bits = bit ? (bits | mask) : (bits & ~mask);
    }
    return bits;
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(config.shots)));
  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(threads);
  auto worker = [&](unsigned t) {
    std::vector<cplx> scratch;
    std::vector<std::pair<std::size_t, Pauli>> faults;
    for (std::uint64_t s = t; s < config.shots; s += threads) ++partial[t][run_shot(s, scratch, faults)];
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  Histogram out;
  for (const auto &part : partial) {
    for (const auto &[bits, n] : part) out[sim_detail::bitstring(bits, c.num_clbits())] += n;
  }
  return out;
}

/// Measurement-free copy of `c` (barriers kept).
inline Circuit strip_measurements(const Circuit &c) {
  std::vector<Gate> gates;
  for (const auto &g : c.gates()) {
    if (g.kind != GateKind::Measure) gates.push_back(g);
  }
  return Circuit(c.num_qubits(), c.num_clbits(), std::move(gates));
}

}  // namespace qreorder
