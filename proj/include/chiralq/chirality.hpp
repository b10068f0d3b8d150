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

// Topological chirality number N of the m_hat texture, computed two ways:
//
//  * chern_quadrature: finite-difference integrand m.(d_x m x d_y m) summed
//    with the trapezoid rule, plus a line-integral estimate of the cap the
//    finite mesh leaves uncovered around m = +z.
//  * chern_plaquette: signed solid angle of every mesh plaquette's image on
//    the sphere, closed off by a triangle fan from +z over the mesh boundary.
//    The closed sum is 4 pi times an integer up to rounding.
//
// N is reported with the orientation in which chi = +1 over a Fermi surface
// (mu > 0) carries N = +1.

#include <cstdint>

#include "chiralq/kspace.hpp"

namespace chiralq {

struct ChernResult {
  int n_integer = 0;
  double raw = 0.0;
  double residual = 0.0;
  int grid_size = 0;
  double k_max = 0.0;
  /// Contribution of the region outside the mesh (already included in raw).
  double cap_correction = 0.0;
};

/// Results are rejected as NotConverged at or above this distance from an integer.
inline constexpr double kConvergenceTolerance = 1e-3;
inline constexpr int kMinGrid = 32;
inline constexpr int kMaxGrid = 4096;

/// 8 * max(sqrt(max(mu, 0)), delta, 1).
double default_k_max(const GapParams& params);

ChernResult chern_quadrature(const GapParams& params, double k_max, int n_grid);
ChernResult chern_plaquette(const GapParams& params, double k_max, int n_grid);

/// Signed solid angle of the spherical triangle (a, b, c) of unit vectors.
double triangle_solid_angle(const MVector& a, const MVector& b, const MVector& c);

struct CrossValidation {
  ChernResult quadrature;
  ChernResult plaquette;
};

/// Runs both methods on doubling grids starting at `start_grid` until both
/// converge on the same grid, then checks they agree on N.
CrossValidation cross_validate(const GapParams& params, int start_grid = 64);
CrossValidation cross_validate(const GapParams& params, double k_max, int start_grid);

}  // namespace chiralq
