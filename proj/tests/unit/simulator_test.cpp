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


#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qreorder/pauli.hpp"
#include "qreorder/simulator.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace qreorder {
namespace {

using testing::fixture_calibration;
using testing::fixture_circuit;

constexpr double kInvSqrt2 = 0.70710678118654752440;

double binomial_sigma(double p, double shots) { return std::sqrt(std::max(p * (1 - p), 1e-12) / shots); }

TEST(Statevector, HadamardOnZero) {
  const auto s = statevector(Circuit(1, 0, {Gate::h(0)}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(std::abs(s[0] - cplx(kInvSqrt2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - cplx(kInvSqrt2)), 0.0, 1e-15);
}

TEST(Statevector, BellState) {
  const auto s = statevector(Circuit(2, 0, {Gate::h(0), Gate::cx(0, 1)}));
  EXPECT_NEAR(std::abs(s[0] - cplx(kInvSqrt2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[3] - cplx(kInvSqrt2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[2]), 0.0, 1e-15);
}

TEST(Statevector, LittleEndian) {
  const auto s = statevector(Circuit(3, 0, {Gate::x(1)}));
  EXPECT_NEAR(std::abs(s[2]), 1.0, 1e-15);
}

// Controlled phase in the {cx, rz} basis, exact up to global phase.
void controlled_phase(std::vector<Gate> &g, int control, int target, double theta) {
  g.push_back(Gate::rz(control, theta / 2));
  g.push_back(Gate::rz(target, theta / 2));
  g.push_back(Gate::cx(control, target));
  g.push_back(Gate::rz(target, -theta / 2));
  g.push_back(Gate::cx(control, target));
}

Circuit qft3(int input) {
  std::vector<Gate> g;
  for (int q = 0; q < 3; ++q) {
    if ((input >> q) & 1) g.push_back(Gate::x(q));
  }
  // Most significant qubit first; final swap restores the bit order.
  for (int q = 2; q >= 0; --q) {
    g.push_back(Gate::h(q));
    for (int k = q - 1; k >= 0; --k) controlled_phase(g, k, q, std::numbers::pi / (1 << (q - k)));
  }
  for (const auto &[a, b] : {std::pair{0, 2}, std::pair{2, 0}, std::pair{0, 2}}) g.push_back(Gate::cx(a, b));
  return Circuit(3, 0, g);
}

TEST(Statevector, QftOfZeroIsUniform) {
  const auto s = statevector(qft3(0));
  for (const auto &a : s) EXPECT_NEAR(std::abs(a), 1.0 / std::sqrt(8.0), 1e-14);
}

TEST(Statevector, QftMatchesDftColumns) {
  for (int x = 0; x < 8; ++x) {
    const auto s = statevector(qft3(x));
    // Reference column of the DFT matrix; compare after removing global phase.
    std::vector<cplx> ref(8);
    for (int k = 0; k < 8; ++k) ref[static_cast<std::size_t>(k)] = std::polar(1.0 / std::sqrt(8.0), 2 * std::numbers::pi * x * k / 8);
    const cplx phase = s[0] / ref[0];
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(s[static_cast<std::size_t>(k)] - phase * ref[static_cast<std::size_t>(k)]), 0.0, 1e-12) << x << "," << k;
  }
}

TEST(Statevector, QubitLimit) {
  EXPECT_THROW(statevector(Circuit(15, 0, {})), InputError);
  EXPECT_NO_THROW(statevector(Circuit(15, 0, {}), 15));
}

TEST(UnitaryEquivalent, Basics) {
  const Circuit a(3, 0, {Gate::cx(0, 1), Gate::cx(0, 2)});
  const Circuit b(3, 0, {Gate::cx(0, 2), Gate::cx(0, 1)});
  EXPECT_TRUE(unitary_equivalent(a, a));
  EXPECT_TRUE(unitary_equivalent(a, b));
  const Circuit chain(3, 0, {Gate::cx(0, 1), Gate::cx(1, 2)});
  const Circuit reversed(3, 0, {Gate::cx(1, 2), Gate::cx(0, 1)});
  EXPECT_FALSE(unitary_equivalent(chain, reversed));
}

TEST(UnitaryEquivalent, IgnoresGlobalPhase) {
  const Circuit full_turn(1, 0, {Gate::rz(0, 2 * std::numbers::pi)});
  EXPECT_TRUE(unitary_equivalent(full_turn, Circuit(1, 0, {})));
  const Circuit h_from_basis(1, 0, {Gate::rz(0, std::numbers::pi / 2), Gate::sx(0), Gate::rz(0, std::numbers::pi / 2)});
  EXPECT_TRUE(unitary_equivalent(h_from_basis, Circuit(1, 0, {Gate::h(0)})));
  EXPECT_FALSE(unitary_equivalent(Circuit(1, 0, {Gate::sx(0)}), Circuit(1, 0, {Gate::x(0)})));
}

TEST(UnitaryEquivalent, Errors) {
  EXPECT_THROW(unitary_equivalent(Circuit(2, 0, {}), Circuit(3, 0, {})), InputError);
  EXPECT_THROW(unitary_equivalent(Circuit(7, 0, {}), Circuit(7, 0, {})), InputError);
}

TEST(IdealDistribution, BvOutcome) {
  const auto dist = ideal_distribution(fixture_circuit("bv4.qasm"));
  double p110 = dist.count("110") ? dist.at("110") : 0.0;
  EXPECT_NEAR(p110, 1.0, 1e-12);
  const auto bv5 = ideal_distribution(fixture_circuit("bv5_m1.qasm"));
  EXPECT_NEAR(bv5.at("0010"), 1.0, 1e-12);
}

TEST(SampleNoisy, NoiselessBvIsPerfect) {
  const Histogram h = sample_noisy(fixture_circuit("bv4.qasm"), fixture_calibration("full4_noiseless.json"), {});
  EXPECT_EQ(pst(h, "110"), 1.0);
}

TEST(SampleNoisy, ForcedZBeforeMeasurementIsInvisible) {
  CalibrationData cal = uniform_line_calibration(1, 0.0, 0.0, 0.0);
  cal.qubits[0].x_error = 1.0;
  SimConfig cfg;
  cfg.shots = 500;
  cfg.forced_pauli = Pauli::Z;
  const Histogram h = sample_noisy(Circuit(1, 1, {Gate::x(0), Gate::measure(0, 0)}), cal, cfg);
  EXPECT_EQ(h, (Histogram{{"1", 500}}));
  cfg.forced_pauli = Pauli::X;
  EXPECT_EQ(sample_noisy(Circuit(1, 1, {Gate::x(0), Gate::measure(0, 0)}), cal, cfg), (Histogram{{"0", 500}}));
}

TEST(SampleNoisy, SingleGateFaultRate) {
  CalibrationData cal = uniform_line_calibration(1, 0.0, 0.0, 0.0);
  cal.qubits[0].x_error = 0.3;
  SimConfig cfg;
  cfg.seed = 17;
  const Histogram h = sample_noisy(Circuit(1, 1, {Gate::x(0), Gate::measure(0, 0)}), cal, cfg);
  // X or Y undo the flip: 0.3 * 2/3.
  const double flipped = 1.0 - pst(h, "1");
  EXPECT_NEAR(flipped, 0.2, 4 * binomial_sigma(0.2, 8192));
}

TEST(SampleNoisy, TwoQubitFaultHitsEachQubit) {
  CalibrationData cal = uniform_line_calibration(2, 0.0, 1.0, 0.0);
  SimConfig cfg;
  cfg.seed = 5;
  const Histogram h = sample_noisy(Circuit(2, 2, {Gate::cx(0, 1), Gate::measure(0, 0), Gate::measure(1, 1)}), cal, cfg);
  // Each qubit independently keeps |0> with probability 1/3.
  EXPECT_NEAR(pst(h, "00"), 1.0 / 9, 4 * binomial_sigma(1.0 / 9, 8192));
  EXPECT_NEAR(pst(h, "11"), 4.0 / 9, 4 * binomial_sigma(4.0 / 9, 8192));
}

TEST(SampleNoisy, ReadoutFlips) {
  CalibrationData cal = uniform_line_calibration(2, 0.0, 0.0, 0.0);
  cal.qubits[1].readout_error = 1.0;
  const Histogram h = sample_noisy(Circuit(2, 2, {Gate::measure(0, 0), Gate::measure(1, 1)}), cal, {});
  EXPECT_EQ(h, (Histogram{{"10", 8192}}));
}

TEST(SampleNoisy, Errors) {
  const CalibrationData cal = uniform_line_calibration(2, 0.0, 0.0, 0.0);
  SimConfig none;
  none.shots = 0;
  EXPECT_THROW(sample_noisy(Circuit(1, 1, {Gate::measure(0, 0)}), cal, none), InputError);
  EXPECT_THROW(sample_noisy(Circuit(2, 1, {Gate::measure(0, 0), Gate::h(0)}), cal, {}), InputError);
  EXPECT_THROW(sample_noisy(Circuit(3, 0, {Gate::h(2)}), cal, {}), CoverageError);
  EXPECT_THROW(sample_noisy(Circuit(15, 0, {}), uniform_line_calibration(15, 0, 0, 0), {}), InputError);
}

TEST(SampleNoisy, SeedDeterminismAcrossThreads) {
  const Circuit c = fixture_circuit("bv5_m1.qasm");
  const CalibrationData cal = fixture_calibration("line5_noisy12.json");
  SimConfig one;
  one.seed = 99;
  SimConfig four = one;
  four.threads = 4;
  const Histogram first = sample_noisy(c, cal, one);
  EXPECT_EQ(first, sample_noisy(c, cal, one));
  EXPECT_EQ(first, sample_noisy(c, cal, four));
  SimConfig other = one;
  other.seed = 100;
  EXPECT_NE(first, sample_noisy(c, cal, other));
}

TEST(SampleNoisy, SmallSeedsGiveDistinctHistograms) {
  const Circuit c = fixture_circuit("bv5_m1.qasm");
  const CalibrationData cal = fixture_calibration("line5_noisy12.json");
  SimConfig a;
  a.seed = 1;
  SimConfig b;
  b.seed = 2;
  EXPECT_NE(sample_noisy(c, cal, a), sample_noisy(c, cal, b));
}

TEST(SampleNoisy, NoiselessMatchesAmplitudes) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    testing::RandomCircuitOptions opt;
    opt.num_qubits = 3;
    opt.num_gates = 15;
    const Circuit c = testing::random_circuit(seed, opt);
    SimConfig cfg;
    cfg.seed = seed;
    const Histogram h = sample_noisy(c, uniform_line_calibration(3, 0.0, 0.0, 0.0), cfg);
    const auto dist = ideal_distribution(c);
    for (const auto &[bits, p] : dist) {
      const double seen = h.count(bits) ? static_cast<double>(h.at(bits)) / 8192.0 : 0.0;
      EXPECT_NEAR(seen, p, 4 * binomial_sigma(p, 8192) + 1e-12) << bits;
    }
    for (const auto &[bits, n] : h) EXPECT_TRUE(dist.count(bits)) << bits;
  }
}

TEST(SampleNoisy, DegradesWithNoiseScale) {
  const Circuit c = fixture_circuit("bv5_m1.qasm");
  const CalibrationData base = fixture_calibration("line5_noisy12.json");
  double previous = 1.0;
  for (double alpha : {0.0, 0.5, 1.0}) {
    CalibrationData cal = base;
    for (auto &[id, q] : cal.qubits) {
      q.readout_error *= alpha;
      q.h_error *= alpha;
      q.x_error *= alpha;
      q.sx_error *= alpha;
    }
    for (auto &[e, r] : cal.edges) r *= alpha;
    SimConfig cfg;
    cfg.seed = 4242;
    const double p = pst(sample_noisy(c, cal, cfg), "0010");
    if (alpha == 0.0) EXPECT_EQ(p, 1.0);
    EXPECT_LE(p, previous + 4 * std::hypot(binomial_sigma(p, 8192), binomial_sigma(previous, 8192)));
    previous = p;
  }
}

TEST(SampleNoisy, LaterNoisyGateRaisesPst) {
  const CalibrationData cal = fixture_calibration("line5_noisy12.json");
  SimConfig cfg;
  cfg.seed = 2026;
  const double early = pst(sample_noisy(fixture_circuit("bv5_m1.qasm"), cal, cfg), "0010");
  const double late = pst(sample_noisy(fixture_circuit("bv5_m2.qasm"), cal, cfg), "0010");
  EXPECT_GT(late - early, 3 * std::hypot(binomial_sigma(early, 8192), binomial_sigma(late, 8192)));
}

// 4x4 oracle: CX (P_c (x) P_t) CX, compared with the tabulated result up to sign.
using Mat4 = std::array<std::array<cplx, 4>, 4>;

Mat4 kron(Pauli control, Pauli target) {
  // Basis index = 2*target + control (control is the low bit).
  const auto c = pauli_matrix(control);
  const auto t = pauli_matrix(target);
  Mat4 m{};
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) m[r][k] = t[(r >> 1) * 2 + (k >> 1)] * c[(r & 1) * 2 + (k & 1)];
  }
  return m;
}

Mat4 cx_matrix() {
  Mat4 m{};
  for (int k = 0; k < 4; ++k) {
    const int out = (k & 1) ? (k ^ 2) : k;
    m[out][k] = 1.0;
  }
  return m;
}

Mat4 mul(const Mat4 &a, const Mat4 &b) {
  Mat4 m{};
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 4; ++j) m[r][k] += a[r][j] * b[j][k];
    }
  }
  return m;
}

double distance_up_to_sign(const Mat4 &a, const Mat4 &b) {
  double plus = 0.0, minus = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) {
      plus = std::max(plus, std::abs(a[r][k] - b[r][k]));
      minus = std::max(minus, std::abs(a[r][k] + b[r][k]));
    }
  }
  return std::min(plus, minus);
}

TEST(PauliConjugation, MatchesMatrixConjugation) {
  const Mat4 cx = cx_matrix();
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
    for (CxRole role : {CxRole::Control, CxRole::Target}) {
      const PauliPair in = role == CxRole::Control ? PauliPair{p, Pauli::I} : PauliPair{Pauli::I, p};
      const PauliPair out = pauli_conjugate_cx(p, role);
      const Mat4 conj = mul(cx, mul(kron(in.control, in.target), cx));
      EXPECT_LE(distance_up_to_sign(conj, kron(out.control, out.target)), 1e-12)
          << pauli_name(p) << (role == CxRole::Control ? "_c" : "_t");
    }
  }
}

TEST(PauliConjugation, FigureCases) {
  EXPECT_EQ(pauli_conjugate_cx(Pauli::X, CxRole::Control), (PauliPair{Pauli::X, Pauli::X}));
  EXPECT_EQ(pauli_conjugate_cx(Pauli::Z, CxRole::Target), (PauliPair{Pauli::Z, Pauli::Z}));
  EXPECT_EQ(pauli_conjugate_cx(Pauli::X, CxRole::Target), (PauliPair{Pauli::I, Pauli::X}));
  EXPECT_EQ(pauli_conjugate_cx(Pauli::Z, CxRole::Control), (PauliPair{Pauli::Z, Pauli::I}));
  EXPECT_EQ(pauli_conjugate_cx(Pauli::Y, CxRole::Control), (PauliPair{Pauli::Y, Pauli::X}));
  EXPECT_EQ(pauli_conjugate_cx(Pauli::Y, CxRole::Target), (PauliPair{Pauli::Z, Pauli::Y}));
}

}  // namespace
}  // namespace qreorder
