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

#include "chiralq/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace chiralq {

Mat4 Mat4::identity() {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

Mat2 operator*(cplx s, const Mat2& x) {
  Mat2 r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {m(0, 0) * v.minus + m(0, 1) * v.plus, m(1, 0) * v.minus + m(1, 1) * v.plus};
}

Mat2 adjoint(const Mat2& x) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

Mat4 operator*(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const cplx xik = x(i, k);
      for (std::size_t j = 0; j < 4; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

Mat4 adjoint(const Mat4& x) {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

Mat4 kron(const Mat2& hi, const Mat2& lo) {
  Mat4 r;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) r(2 * a + c, 2 * b + d) = hi(a, b) * lo(c, d);
  return r;
}

double unitarity_error(const Mat2& u) { return max_abs_diff(adjoint(u) * u, Mat2::identity()); }

double unitarity_error(const Mat4& u) { return max_abs_diff(adjoint(u) * u, Mat4::identity()); }

double max_abs_diff(const Mat2& x, const Mat2& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

double max_abs_diff(const Mat4& x, const Mat4& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

double phase_insensitive_diff(const Mat4& u, const Mat4& target) {
  // <target, u> / |<target, u>| is the optimal phase.
  cplx overlap = 0.0;
  for (std::size_t i = 0; i < 16; ++i) overlap += std::conj(target.a[i]) * u.a[i];
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0};
  Mat4 shifted = target;
  for (auto& v : shifted.a) v *= phase;
  return max_abs_diff(u, shifted);
}

namespace pauli {
Mat2 x() { return {{0.0, 1.0, 1.0, 0.0}}; }
Mat2 y() { return {{0.0, -kI, kI, 0.0}}; }
Mat2 z() { return {{-1.0, 0.0, 0.0, 1.0}}; }
}  // namespace pauli

Mat2 su2_propagator(double h0, double hx, double hy, double hz, double t) {
  const double norm = std::sqrt(hx * hx + hy * hy + hz * hz);
  cplx global = std::exp(-kI * (h0 * t));
  global /= std::abs(global);
  if (norm == 0.0) return global * Mat2::identity();
  double c = std::cos(norm * t);
  double s = std::sin(norm * t) / norm;
  // Renormalize the unit quaternion so rounding does not bias |U psi| in
  // long step chains.
  const double q = std::sqrt(c * c + s * s * (hx * hx + hy * hy + hz * hz));
  c /= q;
  s /= q;
  // cos(|h|t) - i sin(|h|t) (h.sigma)/|h|, with sigma_z = diag(-1, +1).
  Mat2 u;
  u(0, 0) = c + kI * (s * hz);
  u(1, 1) = c - kI * (s * hz);
  u(0, 1) = -kI * (s * hx) - s * hy;
  u(1, 0) = -kI * (s * hx) + s * hy;
  return global * u;
}

}  // namespace chiralq
