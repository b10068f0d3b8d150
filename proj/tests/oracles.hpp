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

// Test-only reference computations. Nothing here calls into the library's
// numerical paths; matrices are built from their textbook definitions and
// handed to Eigen.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "chiralq/linalg.hpp"

namespace oracle {

using cd = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;

// Chirality basis order (|-1>, |+1>); sigma_z is +1 on |+1>.
inline M2 sx() { M2 m; m << 0, 1, 1, 0; return m; }
inline M2 sy() { M2 m; m << 0, cd(0, -1), cd(0, 1), 0; return m; }
inline M2 sz() { M2 m; m << -1, 0, 0, 1; return m; }
inline M2 id2() { return M2::Identity(); }

inline M4 kron(const M2& a, const M2& b) {
  M4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return r;
}

inline M2 expm(const M2& a) { return a.exp(); }
inline M4 expm(const M4& a) { return a.exp(); }

/// exp(-i H t) by dense matrix exponentiation.
inline M2 propagator(const M2& h, double t) { return expm(M2(cd(0, -t) * h)); }

/// exp(-i theta (sigma . sigma) / 4) by dense exponentiation.
inline M4 exchange(double theta) {
  const M4 ss = kron(sx(), sx()) + kron(sy(), sy()) + kron(sz(), sz());
  return expm(M4(cd(0, -theta / 4.0) * ss));
}

inline M2 to_eigen(const chiralq::Mat2& m) {
  M2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(i, j);
  return r;
}

inline M4 to_eigen(const chiralq::Mat4& m) {
  M4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = m(i, j);
  return r;
}

/// max |a - e^{i phi} b| over entries with the best phase.
template <typename M>
double phase_distance(const M& a, const M& b) {
  const cd overlap = (b.adjoint() * a).trace();
  const cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd(1);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

/// Index of the largest |DFT| bin (excluding DC) of a real series, by direct summation.
inline std::size_t dft_peak(const std::vector<double>& x) {
  const std::size_t n = x.size();
  double mean = 0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  std::size_t best = 1;
  double best_mag = -1;
  for (std::size_t k = 1; k < n / 2; ++k) {
    cd acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      acc += (x[j] - mean) * std::polar(1.0, -2.0 * std::numbers::pi * double(k * j % n) / double(n));
    if (std::abs(acc) > best_mag) {
      best_mag = std::abs(acc);
      best = k;
    }
  }
  return best;
}

/// Von Neumann entropy (bits) of a 2x2 density matrix.
inline double entropy(const M2& rho) {
  Eigen::SelfAdjointEigenSolver<M2> es(rho);
  double s = 0;
  for (int i = 0; i < 2; ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-300) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace oracle
