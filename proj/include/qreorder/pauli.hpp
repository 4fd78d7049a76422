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

#include <array>
#include <complex>
#include <string_view>

namespace qreorder {

enum class Pauli { I, X, Y, Z };

constexpr std::string_view pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

constexpr bool has_x(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
constexpr bool has_z(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

constexpr Pauli pauli_from_bits(bool x, bool z) {
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

inline std::array<std::complex<double>, 4> pauli_matrix(Pauli p) {
  using namespace std::complex_literals;
  switch (p) {
    case Pauli::X: return {0.0, 1.0, 1.0, 0.0};
    case Pauli::Y: return {0.0, -1i, 1i, 0.0};
    case Pauli::Z: return {1.0, 0.0, 0.0, -1.0};
    default: return {1.0, 0.0, 0.0, 1.0};
  }
}

struct PauliPair {
  Pauli control = Pauli::I;
  Pauli target = Pauli::I;

  friend bool operator==(const PauliPair &, const PauliPair &) = default;
};

/// CX P CX (up to sign): X on the control spreads to the target, Z on the
/// target spreads to the control, X_t and Z_c pass through unchanged.
constexpr PauliPair pauli_conjugate_cx(PauliPair in) {
  const bool xc = has_x(in.control), zc = has_z(in.control);
  const bool xt = has_x(in.target), zt = has_z(in.target);
  return {pauli_from_bits(xc, zc != zt), pauli_from_bits(xt != xc, zt)};
}

enum class CxRole { Control, Target };

constexpr PauliPair pauli_conjugate_cx(Pauli p, CxRole on) {
  return pauli_conjugate_cx(on == CxRole::Control ? PauliPair{p, Pauli::I} : PauliPair{Pauli::I, p});
}

}  // namespace qreorder
