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

#include "chiralq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chiralq/error.hpp"

namespace chiralq {
namespace {

void require_finite_time(double t, double dt) {
  if (!std::isfinite(t) || t < 0.0) throw Error(ErrorKind::InvalidParams, "t must be >= 0");
  if (!std::isfinite(dt) || dt <= 0.0) throw Error(ErrorKind::InvalidParams, "dt must be > 0");
}

void require_step(double dt, double rate) {
  if (dt * rate >= kMaxStepProduct) {
    std::ostringstream msg;
    msg << "dt * max(|H|, gamma) = " << dt * rate << " must be below " << kMaxStepProduct;
    throw Error(ErrorKind::StepTooLarge, msg.str());
  }
}

// Spectral norm of the traceless part of H(t), maximised over the drive cycle.
double hamiltonian_scale(const TwoLevelParams& p) {
  const double x = p.delta + p.drive_amp;
  return std::sqrt(x * x + p.epsilon * p.epsilon);
}

// Standard-Pauli coefficients of H(t): H = e0 + hx sigma_x + hz sigma_z.
Mat2 step_propagator(const TwoLevelParams& p, double t_mid, double h) {
  const double hx = -p.delta + p.drive_amp * std::cos(p.drive_freq * t_mid);
  return su2_propagator(p.e0, hx, 0.0, p.epsilon, h);
}

}  // namespace

void TwoLevelParams::validate() const {
  for (double v : {e0, delta, epsilon, gamma, drive_amp, drive_freq})
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidParams, "two-level parameters must be finite");
  if (delta < 0.0) throw Error(ErrorKind::InvalidParams, "delta must be >= 0");
  if (gamma < 0.0) throw Error(ErrorKind::InvalidParams, "gamma must be >= 0");
  if (drive_amp < 0.0) throw Error(ErrorKind::InvalidParams, "drive_amp must be >= 0");
  if (drive_freq < 0.0) throw Error(ErrorKind::InvalidParams, "drive_freq must be >= 0");
}

double TwoLevelParams::splitting() const { return std::hypot(delta, epsilon); }

double QubitState::norm() const { return std::sqrt(pop_plus() + pop_minus()); }

DensityMatrix DensityMatrix::pure(const QubitState& s) {
  DensityMatrix d;
  d.rho(0, 0) = s.amp_minus * std::conj(s.amp_minus);
  d.rho(0, 1) = s.amp_minus * std::conj(s.amp_plus);
  d.rho(1, 0) = s.amp_plus * std::conj(s.amp_minus);
  d.rho(1, 1) = s.amp_plus * std::conj(s.amp_plus);
  return d;
}

double DensityMatrix::trace() const { return (rho(0, 0) + rho(1, 1)).real(); }

double DensityMatrix::purity() const {
  double p = 0.0;
  for (const auto& v : rho.a) p += abs2(v);
  return p;
}

double DensityMatrix::p_diff() const { return (rho(1, 1) - rho(0, 0)).real(); }

double DensityMatrix::hermiticity_error() const { return max_abs_diff(rho, adjoint(rho)); }

double DensityMatrix::min_eigenvalue() const {
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + abs2(rho(0, 1)));
  return 0.5 * (a + d) - half_gap;
}

std::array<EigenPair, 2> eigensystem(const TwoLevelParams& params) {
  params.validate();
  const double omega = params.splitting();
  if (omega == 0.0)
    return {{{params.e0, QubitState::minus()}, {params.e0, QubitState::plus()}}};

  // Traceless part in the (|-1>, |+1>) basis is [[-eps, -delta], [-delta, eps]]
  // = omega (cos(theta) Z + sin(theta) X) with Z = diag(1, -1) in this ordering.
  const double theta = std::atan2(-params.delta, -params.epsilon);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  auto canonical = [](double a, double b) {
    // cos/sin of multiples of pi/2 leave ~1e-17 residue; snap it to zero.
    if (std::abs(a) < 1e-15) a = 0.0;
    if (std::abs(b) < 1e-15) b = 0.0;
    if (a < 0.0 || (a == 0.0 && b < 0.0)) {
      a = -a;
      b = -b;
    }
    return QubitState{a, b};
  };
  return {{{params.e0 - omega, canonical(-s, c)}, {params.e0 + omega, canonical(c, s)}}};
}

Mat2 hamiltonian(const TwoLevelParams& params, double t) {
  const double hx = -params.delta + params.drive_amp * std::cos(params.drive_freq * t);
  return params.e0 * Mat2::identity() + hx * pauli::x() + params.epsilon * pauli::z();
}

Mat2 closed_propagator(const TwoLevelParams& params, double t) {
  return su2_propagator(params.e0, -params.delta, 0.0, params.epsilon, t);
}

QubitState evolve_closed(const QubitState& state, const TwoLevelParams& params, double t) {
  params.validate();
  if (params.gamma != 0.0 || params.drive_amp != 0.0)
    throw Error(ErrorKind::InvalidParams, "closed evolution needs gamma = 0 and drive_amp = 0");
  // A rounded phase factor is never exactly unimodular, so a long chain of
  // calls would drift in norm. Apply U and restore the input norm in extended
  // precision; the last rounding to double is then unbiased.
  using ld = long double;
  using lc = std::complex<ld>;
  const Mat2 u = closed_propagator(params, t);
  const auto up = [](const cplx& z) { return lc(z.real(), z.imag()); };
  const auto sq = [](const lc& z) { return z.real() * z.real() + z.imag() * z.imag(); };
  const lc a = up(state.amp_minus), b = up(state.amp_plus);
  lc m = up(u(0, 0)) * a + up(u(0, 1)) * b;
  lc p = up(u(1, 0)) * a + up(u(1, 1)) * b;
  const ld n_out = sq(m) + sq(p);
  if (n_out > 0) {
    const ld scale = std::sqrt((sq(a) + sq(b)) / n_out);
    m *= scale;
    p *= scale;
  }
  return {cplx(static_cast<double>(m.real()), static_cast<double>(m.imag())),
          cplx(static_cast<double>(p.real()), static_cast<double>(p.imag()))};
}

double beat_probability(const TwoLevelParams& params, double t) {
  params.validate();
  const double omega = params.splitting();
  if (omega == 0.0) return 1.0;
  const double ratio = params.delta / omega;
  const double s = std::sin(omega * t);
  return 1.0 - 2.0 * ratio * ratio * s * s;
}

std::vector<double> sample_times(double t, double dt) {
  require_finite_time(t, dt);
  const auto steps = std::max<long long>(1, static_cast<long long>(std::ceil(t / dt - 1e-9)));
  const double h = t / static_cast<double>(steps);
  std::vector<double> times(static_cast<std::size_t>(steps) + 1);
  for (long long k = 0; k <= steps; ++k) times[static_cast<std::size_t>(k)] = h * static_cast<double>(k);
  times.back() = t;
  return times;
}

std::vector<DensitySample> evolve_damped(const DensityMatrix& rho, const TwoLevelParams& params,
                                         double t, double dt) {
  params.validate();
  require_finite_time(t, dt);
  if (params.drive_amp != 0.0)
    throw Error(ErrorKind::InvalidParams, "driven dephasing is not supported");
  require_step(dt, std::max(hamiltonian_scale(params), params.gamma));

  const auto times = sample_times(t, dt);
  const double h = times.size() > 1 ? times[1] : 0.0;
  const Mat2 half = closed_propagator(params, 0.5 * h);
  const Mat2 half_dag = adjoint(half);
  const double coherence = std::exp(-2.0 * params.gamma * h);

  std::vector<DensitySample> out;
  out.reserve(times.size());
  DensityMatrix cur = rho;
  out.push_back({0.0, cur});
  for (std::size_t k = 1; k < times.size(); ++k) {
    Mat2 r = half * cur.rho * half_dag;
    r(0, 1) *= coherence;
    r(1, 0) *= coherence;
    cur.rho = half * r * half_dag;
    out.push_back({times[k], cur});
  }
  return out;
}

std::vector<StateSample> drive_evolve(const QubitState& state, const TwoLevelParams& params,
                                      double t, double dt) {
  params.validate();
  require_finite_time(t, dt);
  if (params.gamma != 0.0)
    throw Error(ErrorKind::InvalidParams, "driven evolution needs gamma = 0");
  require_step(dt, hamiltonian_scale(params));

  const auto times = sample_times(t, dt);
  std::vector<StateSample> out;
  out.reserve(times.size());
  if (params.drive_amp == 0.0) {
    for (double tk : times) out.push_back({tk, evolve_closed(state, params, tk)});
    return out;
  }
  const double h = times.size() > 1 ? times[1] : 0.0;
  Vec2 psi = state.vec();
  out.push_back({0.0, state});
  for (std::size_t k = 1; k < times.size(); ++k) {
    psi = step_propagator(params, times[k - 1] + 0.5 * h, h) * psi;
    out.push_back({times[k], QubitState::from(psi)});
  }
  return out;
}

Mat2 drive_propagator(const TwoLevelParams& params, double t, double dt) {
  params.validate();
  require_finite_time(t, dt);
  require_step(dt, hamiltonian_scale(params));
  const auto times = sample_times(t, dt);
  if (params.drive_amp == 0.0) return closed_propagator(params, t);
  const double h = times.size() > 1 ? times[1] : 0.0;
  Mat2 u = Mat2::identity();
  for (std::size_t k = 1; k < times.size(); ++k)
    u = step_propagator(params, times[k - 1] + 0.5 * h, h) * u;
  return u;
}

}  // namespace chiralq
