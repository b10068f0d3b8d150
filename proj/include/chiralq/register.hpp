// Copyright 2026 The chiralq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Linear chains of chirality qubits held as dense state vectors.
//
// Basis index bit q is qubit q's chirality: 1 for |+1>, 0 for |-1>. Two-qubit
// operators act on the local index 2 * b_i + b_j for the ordered pair (i, j).

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "chiralq/linalg.hpp"

namespace chiralq {

inline constexpr int kMaxQubits = 12;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-10;

/// Field-effect switchable weak link between neighbouring qubits.
struct CouplingLink {
  int i = 0;
  int j = 1;
  bool on = false;
  /// Exchange strength J; a pulse of length t has area J t.
  double strength = 1.0;

  void validate() const;
};

/// Per-qubit bias from a field gradient along the chain.
struct FieldProfile {
  std::vector<double> eps;
};

struct RegisterState {
  int n = 1;
  std::vector<cplx> amps;
  /// One link per neighbouring pair (k, k+1); all start off.
  std::vector<CouplingLink> links;

  /// All qubits in |-1>.
  static RegisterState all_minus(int n);
  /// Product state from per-qubit chiralities (+1 / -1), qubit 0 first.
  static RegisterState product(std::span<const int> chiralities);
  static RegisterState from_amplitudes(int n, std::vector<cplx> amps);

  void validate() const;
  double norm() const;
  std::size_t dimension() const { return amps.size(); }

  const CouplingLink& link(int i, int j) const;
  RegisterState with_link(int i, int j, bool on) const;

  double prob_plus(int q) const;
  /// |amp|^2 for every basis index.
  std::vector<double> probabilities() const;
};

namespace gates {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 hadamard();
/// Real rotation taking |+1> to (|-1> + |+1>)/sqrt(2), the tunneling-symmetric state.
Mat2 symmetric();
Mat2 s();
Mat2 t();
/// exp(-i angle sigma_z / 2).
Mat2 rz(double angle);
/// Looks up I, X, Y, Z, H, SYM, S, SDG, T, TDG (case-insensitive).
Mat2 named(std::string_view name);
/// CNOT on the local pair index with the high bit as control.
Mat4 cnot();
Mat4 swap();
}  // namespace gates

/// exp(-i theta (sigma_i . sigma_j) / 4); theta = pi is SWAP up to phase.
Mat4 exchange_unitary(double theta);

RegisterState apply_single_gate(const RegisterState& state, int q, const Mat2& gate);
RegisterState apply_two_qubit(const RegisterState& state, int i, int j, const Mat4& gate);

/// Throws LinkOff unless `link.on`.
RegisterState exchange_pulse(const RegisterState& state, const CouplingLink& link,
                             double pulse_area);

/// CNOT (control |+1> flips the target) built from z rotations, target
/// Hadamards and two sqrt-SWAP pulses over the link joining the pair.
RegisterState cnot_composed(const RegisterState& state, int control, int target);

/// Net 4x4 unitary of the cnot_composed sequence, control on the high bit.
Mat4 cnot_composed_unitary();

/// Global RF field at the target's resonance 2|eps_target|, applied to every
/// qubit for `duration`. Needs all links off and biases separated by 5 * amp.
RegisterState selective_rf_pulse(const RegisterState& state, const FieldProfile& profile,
                                 int target, double amp, double duration, double dt);

/// Ideal reset of qubit q to `value` (+1 or -1).
RegisterState initialize_reset(const RegisterState& state, int q, int value);

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);

struct Measurement {
  int outcome = 0;
  RegisterState state;
};

Measurement measure(const RegisterState& state, int q, Rng& rng);
Measurement measure(const RegisterState& state, int q, std::uint64_t seed);

/// Spontaneous Hall voltage read for chirality `outcome`: outcome * v0.
double hall_voltage(int outcome, double v0);

/// Mean Hall voltage of qubit q over repeated reads: v0 (P_{+1} - P_{-1}).
double expected_hall_voltage(const RegisterState& state, int q, double v0);

}  // namespace chiralq
