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

// Two-level dynamics in the chirality basis {|-1>, |+1>} under
//
//   H = E0 - delta sigma_x + epsilon sigma_z + A cos(omega t) sigma_x
//
// with sigma_z|+-1> = +-|+-1>. The environment is a pure-dephasing channel
// (jump operator sigma_z, rate gamma); it damps the beating but does not
// renormalize delta.

#include <array>
#include <vector>

#include "chiralq/linalg.hpp"

namespace chiralq {

struct TwoLevelParams {
  double e0 = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  double gamma = 0.0;
  double drive_amp = 0.0;
  double drive_freq = 0.0;

  void validate() const;

  /// sqrt(delta^2 + epsilon^2); the beat frequency is twice this.
  double splitting() const;
};

struct QubitState {
  cplx amp_minus{};
  cplx amp_plus{1.0};

  static QubitState plus() { return {0.0, 1.0}; }
  static QubitState minus() { return {1.0, 0.0}; }

  double pop_plus() const { return abs2(amp_plus); }
  double pop_minus() const { return abs2(amp_minus); }
  /// P_{+1} - P_{-1}.
  double p_diff() const { return pop_plus() - pop_minus(); }
  double norm() const;

  Vec2 vec() const { return {amp_minus, amp_plus}; }
  static QubitState from(const Vec2& v) { return {v.minus, v.plus}; }
};

struct DensityMatrix {
  Mat2 rho{{0.0, 0.0, 0.0, 1.0}};

  static DensityMatrix pure(const QubitState& s);

  double trace() const;
  double purity() const;
  double p_diff() const;
  double pop_plus() const { return rho(1, 1).real(); }
  double pop_minus() const { return rho(0, 0).real(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;
};

struct EigenPair {
  double energy = 0.0;
  QubitState state;
};

/// Ground state first. Eigenvectors are real with a non-negative leading
/// component. For delta = epsilon = 0 returns (|-1>, |+1>) in that order.
std::array<EigenPair, 2> eigensystem(const TwoLevelParams& params);

/// H at time t, including the drive term.
Mat2 hamiltonian(const TwoLevelParams& params, double t = 0.0);

/// exp(-i H t) for the undriven Hamiltonian.
Mat2 closed_propagator(const TwoLevelParams& params, double t);

/// Requires gamma = 0 and drive_amp = 0.
QubitState evolve_closed(const QubitState& state, const TwoLevelParams& params, double t);

/// P_{+1} - P_{-1} at time t starting from |+1>:
/// 1 - 2 (delta / Omega)^2 sin^2(Omega t), Omega = sqrt(delta^2 + epsilon^2).
double beat_probability(const TwoLevelParams& params, double t);

/// Largest dt * max(|H|, gamma) accepted by the fixed-step integrators.
inline constexpr double kMaxStepProduct = 0.1;

/// Sample times 0, h, 2h, ..., t with h = t / ceil(t / dt).
std::vector<double> sample_times(double t, double dt);

struct DensitySample {
  double t = 0.0;
  DensityMatrix rho;
};

/// Strang-split dephasing master equation: half unitary step, exact dephasing
/// channel, half unitary step. Each step is a CPTP map, so trace, Hermiticity
/// and positivity hold to rounding and purity never increases.
std::vector<DensitySample> evolve_damped(const DensityMatrix& rho, const TwoLevelParams& params,
                                         double t, double dt);

struct StateSample {
  double t = 0.0;
  QubitState state;
};

/// Fixed-step driven evolution; each step applies the exact exponential of H
/// frozen at the step midpoint. drive_amp = 0 falls back to evolve_closed at
/// every sample time.
std::vector<StateSample> drive_evolve(const QubitState& state, const TwoLevelParams& params,
                                      double t, double dt);

/// Net unitary of drive_evolve over [0, t].
Mat2 drive_propagator(const TwoLevelParams& params, double t, double dt);

}  // namespace chiralq
