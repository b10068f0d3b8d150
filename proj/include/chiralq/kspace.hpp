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

// Chiral p-wave order parameter d = z * delta * (kx + i chi ky) / kF and the
// unit texture m_hat(k) built from (Re d_z, Im d_z, eps_k).
//
// Units: hbar = 1 and 2m = 1, so eps_k = k^2 - mu and kF = sqrt(mu).

#include <complex>

namespace chiralq {

struct Momentum {
  double kx = 0.0;
  double ky = 0.0;
};

enum class Chirality : int { Minus = -1, Plus = +1 };

constexpr int sign(Chirality c) { return static_cast<int>(c); }

struct GapParams {
  double delta = 1.0;
  double mu = 1.0;
  Chirality chi = Chirality::Plus;

  /// Throws InvalidParams on delta < 0 or non-finite fields.
  void validate() const;

  /// True when |m(k)| > 0 for every k: a nonzero gap over a Fermi surface, or
  /// no Fermi surface at all. mu = 0 leaves a zero at k = 0.
  bool gapped() const { return mu < 0.0 || (mu > 0.0 && delta > 0.0); }
};

/// Builds GapParams from a signed integer chirality; rejects anything but +-1.
GapParams make_gap_params(double delta, double mu, int chi);

struct MVector {
  double mx = 0.0;
  double my = 0.0;
  double mz = 0.0;

  double norm() const;
};

/// delta * (kx + i chi ky) / kF. Throws NonpositiveMu when mu <= 0.
std::complex<double> d_z(Momentum k, const GapParams& params);

/// eps_k = kx^2 + ky^2 - mu.
double dispersion(Momentum k, const GapParams& params);

/// m(k) = (Re d_z, Im d_z, eps_k). For mu <= 0 the 1/kF factor is dropped,
/// which leaves the texture's degree unchanged.
MVector texture(Momentum k, const GapParams& params);

/// m(k) / |m(k)|. Throws ZeroTexture where m vanishes.
MVector m_hat(Momentum k, const GapParams& params);

}  // namespace chiralq
