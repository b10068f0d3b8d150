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

// Fixed-size complex matrices for two-level and two-qubit algebra. Basis index
// 0 is the |-1> chirality state, index 1 is |+1>.

#include <array>
#include <complex>
#include <cstddef>

namespace chiralq {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// |z|^2 as re^2 + im^2. std::norm may route through hypot, which biases
/// accumulated norms.
inline double abs2(cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }

struct Vec2 {
  cplx minus{};
  cplx plus{};
};

struct Mat2 {
  std::array<cplx, 4> a{};

  cplx& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }

  static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
};

struct Mat4 {
  std::array<cplx, 16> a{};

  cplx& operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a[4 * r + c]; }

  static Mat4 identity();
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator*(cplx s, const Mat2& x);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Vec2 operator*(const Mat2& m, const Vec2& v);
Mat2 adjoint(const Mat2& x);

Mat4 operator*(const Mat4& x, const Mat4& y);
Mat4 adjoint(const Mat4& x);
/// Kronecker product; `hi` acts on the high bit of the local 4-index.
Mat4 kron(const Mat2& hi, const Mat2& lo);

/// Largest entry magnitude of U^dagger U - 1.
double unitarity_error(const Mat2& u);
double unitarity_error(const Mat4& u);
double max_abs_diff(const Mat2& x, const Mat2& y);
double max_abs_diff(const Mat4& x, const Mat4& y);

/// Distance to `target` after removing the best global phase.
double phase_insensitive_diff(const Mat4& u, const Mat4& target);

namespace pauli {
Mat2 x();
Mat2 y();
/// Chirality operator: +1 on |+1>, -1 on |-1>.
Mat2 z();
}  // namespace pauli

/// exp(-i (h0 + hx X + hy Y + hz Z) t) with X, Y, Z from `pauli`, in closed form.
Mat2 su2_propagator(double h0, double hx, double hy, double hz, double t);

}  // namespace chiralq
