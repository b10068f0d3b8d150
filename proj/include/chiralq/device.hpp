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

// Feasibility arithmetic for a single chiral qubit: Zeeman splitting of one
// Cooper pair, the pair budget that keeps an RF pulse below the gap, and the
// film geometry that budget allows.

#include <cstdint>

namespace chiralq::device {

/// Bohr magneton, CODATA 2018, eV/T.
inline constexpr double kBohrMagnetonEvPerTesla = 5.7883818060e-5;
inline constexpr double kTeslaPerGauss = 1e-4;
inline constexpr double kAngstromPerNanometre = 10.0;
/// Upper bound on the film thickness of a thin-film qubit, angstrom.
inline constexpr double kMaxFilmThicknessA = 1000.0;

constexpr double gauss_to_tesla(double g) { return g * kTeslaPerGauss; }
constexpr double tesla_to_gauss(double t) { return t / kTeslaPerGauss; }

struct MaterialParams {
  /// Delta in eV (half of 2 Delta ~ 1 meV).
  double gap_ev = 5e-4;
  /// m* / m_e.
  double mass_ratio = 4.0;
  double cell_volume_a3 = 100.0;
  double lambda_l_a = 2000.0;
  double film_thickness_a = 100.0;

  void validate() const;
};

/// Splitting (mu_B / mass_ratio) H of one pair, in eV.
double zeeman_splitting(double h_gauss, const MaterialParams& params);

/// floor(gap_ev / eps_ev).
std::uint64_t max_pair_number(const MaterialParams& params, double eps_ev);

struct Geometry {
  double volume_a3 = 0.0;
  double lx_a = 0.0;
  double ly_a = 0.0;
  double lz_a = 0.0;
  /// Every linear dimension is below the London penetration depth.
  bool within_lambda = false;
};

/// One pair per unit cell, spread over a square film of the configured thickness.
Geometry max_volume(const MaterialParams& params, std::uint64_t n_pairs);

struct Report {
  double h_gauss = 0.0;
  double eps_ev = 0.0;
  std::uint64_t n_pairs = 0;
  Geometry geometry;
};

Report estimate(double h_gauss, const MaterialParams& params);

}  // namespace chiralq::device
