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

#include "chiralq/chirality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "chiralq/error.hpp"

namespace chiralq {
namespace {

// The literal integral over (kx, ky) gives -chi for a Fermi surface; the
// reported number flips it so that chi = +1 maps to N = +1.
constexpr double kOrientation = -1.0;

MVector cross(const MVector& a, const MVector& b) {
  return {a.my * b.mz - a.mz * b.my, a.mz * b.mx - a.mx * b.mz, a.mx * b.my - a.my * b.mx};
}

double dot(const MVector& a, const MVector& b) { return a.mx * b.mx + a.my * b.my + a.mz * b.mz; }

constexpr MVector kNorthPole{0.0, 0.0, 1.0};

// Antisymmetric weights of the eighth-order central first derivative.
constexpr int kStencilHalfWidth = 4;
constexpr std::array<double, kStencilHalfWidth> kStencil{4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0,
                                                         -1.0 / 280.0};

void check_preconditions(const GapParams& params, double k_max, int n_grid) {
  params.validate();
  if (params.delta == 0.0 && params.mu >= 0.0)
    throw Error(ErrorKind::GaplessTexture, "delta = 0 with mu >= 0 leaves a nodal Fermi circle");
  if (params.mu == 0.0)
    throw Error(ErrorKind::NotConverged,
                "mu = 0 is the topological transition: m(k) vanishes at k = 0 and N is undefined");
  const double scale = std::max({std::sqrt(std::max(params.mu, 0.0)), params.delta, 1.0});
  if (!(k_max > 3.0 * scale)) {
    std::ostringstream msg;
    msg << "k_max = " << k_max << " must exceed " << 3.0 * scale;
    throw Error(ErrorKind::InvalidParams, msg.str());
  }
  if (n_grid < kMinGrid || n_grid > kMaxGrid) {
    std::ostringstream msg;
    msg << "n_grid = " << n_grid << " outside [" << kMinGrid << ", " << kMaxGrid << "]";
    throw Error(ErrorKind::InvalidParams, msg.str());
  }
}

// Nodes sit half a cell away from k = 0: x_i = -k_max + (i + 1/2) h.
struct Mesh {
  double k_max;
  int n;
  double h;

  Mesh(double k_max_, int n_) : k_max(k_max_), n(n_), h(2.0 * k_max_ / n_) {}

  double coord(int i) const { return -k_max + (i + 0.5) * h; }
  double hull() const { return k_max - 0.5 * h; }
};

ChernResult finish(double total, int n_grid, double k_max, double cap) {
  ChernResult r;
  r.raw = kOrientation * total / (4.0 * std::numbers::pi);
  r.n_integer = static_cast<int>(std::lround(r.raw));
  r.residual = std::abs(r.raw - r.n_integer);
  r.grid_size = n_grid;
  r.k_max = k_max;
  r.cap_correction = kOrientation * cap / (4.0 * std::numbers::pi);
  if (!(r.residual < kConvergenceTolerance)) {
    std::ostringstream msg;
    msg << "raw = " << r.raw << " is " << r.residual << " from the nearest integer (grid "
        << n_grid << ", k_max " << k_max << ")";
    throw Error(ErrorKind::NotConverged, msg.str());
  }
  return r;
}

// Solid angle of the region outside the mesh hull, as the line integral
// -oint (1 - m_z) dphi along the hull boundary traversed counterclockwise in k.
double cap_line_integral(const GapParams& params, const Mesh& mesh) {
  const double a = mesh.hull();
  const int per_side = 4 * (mesh.n - 1);
  const double step = 2.0 * a / per_side;
  const std::array<Momentum, 4> corners{{{-a, -a}, {a, -a}, {a, a}, {-a, a}}};
  const std::array<Momentum, 4> dirs{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

  double total = 0.0;
  MVector prev = m_hat(corners[0], params);
  for (int side = 0; side < 4; ++side) {
    for (int s = 1; s <= per_side; ++s) {
      const Momentum k{corners[side].kx + dirs[side].kx * step * s,
                       corners[side].ky + dirs[side].ky * step * s};
      const MVector cur = m_hat(k, params);
      double dphi = std::atan2(cur.my, cur.mx) - std::atan2(prev.my, prev.mx);
      if (dphi > std::numbers::pi) dphi -= 2.0 * std::numbers::pi;
      if (dphi < -std::numbers::pi) dphi += 2.0 * std::numbers::pi;
      total += 0.5 * ((1.0 - prev.mz) + (1.0 - cur.mz)) * dphi;
      prev = cur;
    }
  }
  return -total;
}

}  // namespace

double default_k_max(const GapParams& params) {
  return 8.0 * std::max({std::sqrt(std::max(params.mu, 0.0)), params.delta, 1.0});
}

double triangle_solid_angle(const MVector& a, const MVector& b, const MVector& c) {
  // Van Oosterom-Strackee.
  const double num = dot(a, cross(b, c));
  const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  return 2.0 * std::atan2(num, den);
}

ChernResult chern_quadrature(const GapParams& params, double k_max, int n_grid) {
  check_preconditions(params, k_max, n_grid);
  const Mesh mesh(k_max, n_grid);
  const int n = n_grid;
  const int pad = kStencilHalfWidth;
  const int width = n + 2 * pad;

  // Rolling window of rows of m_hat for the eighth-order central stencil.
  std::array<std::vector<MVector>, 2 * kStencilHalfWidth + 1> rows;
  auto fill_row = [&](std::vector<MVector>& row, int j) {
    row.resize(width);
    const double ky = mesh.coord(j);
    for (int i = -pad; i < n + pad; ++i) row[i + pad] = m_hat({mesh.coord(i), ky}, params);
  };
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) fill_row(rows[r], r - pad);

  const double inv_h = 1.0 / mesh.h;
  // Central derivative from samples at offsets -4..4 along one axis.
  auto derivative = [&](auto&& sample) {
    MVector d;
    for (int s = 1; s <= kStencilHalfWidth; ++s) {
      const MVector& p = sample(s);
      const MVector& m = sample(-s);
      const double w = kStencil[s - 1];
      d.mx += w * (p.mx - m.mx);
      d.my += w * (p.my - m.my);
      d.mz += w * (p.mz - m.mz);
    }
    d.mx *= inv_h;
    d.my *= inv_h;
    d.mz *= inv_h;
    return d;
  };

  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    const double wy = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    const auto& centre_row = rows[pad];
    double row_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const int c = i + pad;
      const MVector& m = centre_row[c];
      const MVector dx = derivative([&](int s) -> const MVector& { return centre_row[c + s]; });
      const MVector dy = derivative([&](int s) -> const MVector& { return rows[pad + s][c]; });
      const double wx = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      row_sum += wx * dot(m, cross(dx, dy));
    }
    total += wy * row_sum;
    if (j + 1 < n) {
      std::rotate(rows.begin(), rows.begin() + 1, rows.end());
      fill_row(rows.back(), j + 1 + pad);
    }
  }
  total *= mesh.h * mesh.h;

  const double cap = cap_line_integral(params, mesh);
  return finish(total + cap, n_grid, k_max, cap);
}

ChernResult chern_plaquette(const GapParams& params, double k_max, int n_grid) {
  check_preconditions(params, k_max, n_grid);
  const Mesh mesh(k_max, n_grid);
  const int n = n_grid;
  constexpr double kAntipodal = 1e-9;

  auto antipodal = [](const MVector& a, const MVector& b) {
    return MVector{a.mx + b.mx, a.my + b.my, a.mz + b.mz}.norm() < kAntipodal;
  };

  std::vector<MVector> lower(n), upper(n);
  for (int i = 0; i < n; ++i) lower[i] = m_hat({mesh.coord(i), mesh.coord(0)}, params);

  double total = 0.0;
  for (int j = 0; j + 1 < n; ++j) {
    const double ky = mesh.coord(j + 1);
    for (int i = 0; i < n; ++i) upper[i] = m_hat({mesh.coord(i), ky}, params);
    double row_sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      // Counterclockwise in k: a -> b -> c -> d.
      const MVector& a = lower[i];
      const MVector& b = lower[i + 1];
      const MVector& c = upper[i + 1];
      const MVector& d = upper[i];
      if (antipodal(a, b) || antipodal(b, c) || antipodal(c, d) || antipodal(d, a) ||
          antipodal(a, c) || antipodal(b, d)) {
        std::ostringstream msg;
        msg << "antipodal corners near k = (" << mesh.coord(i) << ", " << mesh.coord(j)
            << "); refine the grid";
        throw Error(ErrorKind::DegeneratePlaquette, msg.str());
      }
      row_sum += triangle_solid_angle(a, b, c) + triangle_solid_angle(a, c, d);
    }
    total += row_sum;
    std::swap(lower, upper);
  }

  // Close the surface through +z: the exterior of the hull is a disc around
  // k = infinity whose boundary runs clockwise.
  std::vector<MVector> loop;
  loop.reserve(4 * (n - 1));
  const double y0 = mesh.coord(0);
  const double y1 = mesh.coord(n - 1);
  for (int i = 0; i < n - 1; ++i) loop.push_back(m_hat({mesh.coord(i), y0}, params));
  for (int j = 0; j < n - 1; ++j) loop.push_back(m_hat({y1, mesh.coord(j)}, params));
  for (int i = n - 1; i > 0; --i) loop.push_back(m_hat({mesh.coord(i), y1}, params));
  for (int j = n - 1; j > 0; --j) loop.push_back(m_hat({y0, mesh.coord(j)}, params));

  double cap = 0.0;
  for (std::size_t s = 0; s < loop.size(); ++s) {
    const MVector& cur = loop[s];
    const MVector& next = loop[(s + 1) % loop.size()];
    cap += triangle_solid_angle(kNorthPole, next, cur);
  }
  return finish(total + cap, n_grid, k_max, cap);
}

CrossValidation cross_validate(const GapParams& params, int start_grid) {
  return cross_validate(params, default_k_max(params), start_grid);
}

CrossValidation cross_validate(const GapParams& params, double k_max, int start_grid) {
  std::ostringstream failures;
  for (int n = std::max(start_grid, kMinGrid); n <= kMaxGrid; n *= 2) {
    CrossValidation out;
    try {
      out.plaquette = chern_plaquette(params, k_max, n);
      out.quadrature = chern_quadrature(params, k_max, n);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotConverged && e.kind() != ErrorKind::DegeneratePlaquette) throw;
      failures.str(e.what());
      continue;
    }
    if (out.plaquette.n_integer != out.quadrature.n_integer) {
      std::ostringstream msg;
      msg << "plaquette N = " << out.plaquette.n_integer << " but quadrature N = "
          << out.quadrature.n_integer << " at grid " << n;
      throw Error(ErrorKind::MethodDisagreement, msg.str());
    }
    return out;
  }
  throw Error(ErrorKind::NotConverged,
              "no grid up to " + std::to_string(kMaxGrid) + " converged; last: " + failures.str());
}

}  // namespace chiralq
