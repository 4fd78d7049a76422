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

// Dense statevector/unitary kernels. Qubit 0 is the least significant bit of
// a basis-state index.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "qreorder/circuit.hpp"
#include "qreorder/error.hpp"

namespace qreorder {

using cplx = std::complex<double>;

/// Row-major 2x2 matrix of a single-qubit gate.
inline std::array<cplx, 4> single_qubit_matrix(GateKind kind, double angle = 0.0) {
  using namespace std::complex_literals;
  const double r = std::numbers::sqrt2 / 2;
  switch (kind) {
    case GateKind::H: return {r, r, r, -r};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::SX: return {cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)};
    case GateKind::RZ: return {std::exp(-0.5i * angle), 0.0, 0.0, std::exp(0.5i * angle)};
    default: throw InputError("not a single-qubit unitary: " + std::string(gate_name(kind)));
  }
}

inline void apply_single(std::span<cplx> state, int qubit, const std::array<cplx, 4> &m) {
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i & bit) continue;
    const cplx a = state[i];
    const cplx b = state[i | bit];
    state[i] = m[0] * a + m[1] * b;
    state[i | bit] = m[2] * a + m[3] * b;
  }
}

inline void apply_cx(std::span<cplx> state, int control, int target) {
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(state[i], state[i | tb]);
  }
}

/// Applies a unitary gate whose qubits are remapped through `wire`
/// (wire[q] is the local index of circuit qubit q). Measures and barriers
/// are skipped.
inline void apply_gate(std::span<cplx> state, const Gate &g, std::span<const int> wire = {}) {
  auto local = [&](int q) { return wire.empty() ? q : wire[static_cast<std::size_t>(q)]; };
  switch (g.kind) {
    case GateKind::Measure:
    case GateKind::Barrier: return;
    case GateKind::CX: apply_cx(state, local(g.qubits[0]), local(g.qubits[1])); return;
    default: apply_single(state, local(g.qubits[0]), single_qubit_matrix(g.kind, g.angle));
  }
}

/// Square complex matrix, column-major: column j is U|j>.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<cplx> data;

  cplx &at(std::size_t row, std::size_t col) { return data[col * dim + row]; }
  const cplx &at(std::size_t row, std::size_t col) const { return data[col * dim + row]; }
  std::span<cplx> column(std::size_t col) { return {data.data() + col * dim, dim}; }
};

inline DenseMatrix identity_matrix(std::size_t dim) {
  DenseMatrix m{dim, std::vector<cplx>(dim * dim)};
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

/// Unitary of a gate sequence on `num_local` qubits.
inline DenseMatrix sequence_unitary(std::span<const Gate> gates, int num_local, std::span<const int> wire = {}) {
  auto u = identity_matrix(std::size_t{1} << num_local);
  for (std::size_t col = 0; col < u.dim; ++col) {
    auto c = u.column(col);
    for (const auto &g : gates) apply_gate(c, g, wire);
  }
  return u;
}

inline DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b) {
  DenseMatrix out{a.dim, std::vector<cplx>(a.dim * a.dim)};
  for (std::size_t j = 0; j < a.dim; ++j) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      const cplx bkj = b.at(k, j);
      if (bkj == 0.0) continue;
      for (std::size_t i = 0; i < a.dim; ++i) out.at(i, j) += a.at(i, k) * bkj;
    }
  }
  return out;
}

inline double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  return worst;
}

/// min over unit phases of max |A - e^{i phi} B|, with the phase taken from
/// the largest entry of B. Zero iff A equals B up to global phase.
inline double phase_insensitive_distance(const DenseMatrix &a, const DenseMatrix &b) {
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < b.data.size(); ++i) {
    if (std::abs(b.data[i]) > std::abs(b.data[pivot])) pivot = i;
  }
  if (std::abs(b.data[pivot]) == 0.0 || std::abs(a.data[pivot]) == 0.0) return max_abs_difference(a, b);
  const cplx phase = (a.data[pivot] / std::abs(a.data[pivot])) / (b.data[pivot] / std::abs(b.data[pivot]));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) worst = std::max(worst, std::abs(a.data[i] - phase * b.data[i]));
  return worst;
}

}  // namespace qreorder
