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

#include "chiralq/register.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "chiralq/dynamics.hpp"
#include "chiralq/error.hpp"

namespace chiralq {
namespace {

void require_qubit(const RegisterState& s, int q) {
  if (q < 0 || q >= s.n) {
    std::ostringstream msg;
    msg << "qubit " << q << " outside register of " << s.n;
    throw Error(ErrorKind::IndexOutOfRange, msg.str());
  }
}

void require_neighbours(const RegisterState& s, int i, int j) {
  require_qubit(s, i);
  require_qubit(s, j);
  if (std::abs(i - j) != 1) {
    std::ostringstream msg;
    msg << "qubits " << i << " and " << j << " are not neighbours in the chain";
    throw Error(ErrorKind::IndexOutOfRange, msg.str());
  }
}

constexpr std::size_t bit(int q) { return std::size_t{1} << q; }

}  // namespace

void CouplingLink::validate() const {
  if (std::abs(i - j) != 1)
    throw Error(ErrorKind::InvalidParams, "links join neighbouring qubits only");
  if (!(strength > 0.0) || !std::isfinite(strength))
    throw Error(ErrorKind::InvalidParams, "link strength must be > 0");
}

RegisterState RegisterState::all_minus(int n) {
  if (n < 1 || n > kMaxQubits) {
    std::ostringstream msg;
    msg << "register size " << n << " outside [1, " << kMaxQubits << "]";
    throw Error(ErrorKind::InvalidParams, msg.str());
  }
  RegisterState s;
  s.n = n;
  s.amps.assign(bit(n), 0.0);
  s.amps[0] = 1.0;
  for (int k = 0; k + 1 < n; ++k) s.links.push_back({k, k + 1, false, 1.0});
  return s;
}

RegisterState RegisterState::product(std::span<const int> chiralities) {
  RegisterState s = all_minus(static_cast<int>(chiralities.size()));
  std::size_t index = 0;
  for (std::size_t q = 0; q < chiralities.size(); ++q) {
    if (chiralities[q] != 1 && chiralities[q] != -1)
      throw Error(ErrorKind::InvalidParams, "chirality must be +1 or -1");
    if (chiralities[q] == 1) index |= bit(static_cast<int>(q));
  }
  s.amps[0] = 0.0;
  s.amps[index] = 1.0;
  return s;
}

RegisterState RegisterState::from_amplitudes(int n, std::vector<cplx> amps) {
  RegisterState s = all_minus(n);
  s.amps = std::move(amps);
  s.validate();
  return s;
}

void RegisterState::validate() const {
  if (n < 1 || n > kMaxQubits || amps.size() != bit(n))
    throw Error(ErrorKind::InvalidParams, "register size and amplitude count disagree");
  if (std::abs(norm() - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "register norm " << norm() << " is not 1";
    throw Error(ErrorKind::InvalidParams, msg.str());
  }
}

double RegisterState::norm() const {
  double s = 0.0;
  for (const auto& a : amps) s += abs2(a);
  return std::sqrt(s);
}

const CouplingLink& RegisterState::link(int i, int j) const {
  require_neighbours(*this, i, j);
  return links[static_cast<std::size_t>(std::min(i, j))];
}

RegisterState RegisterState::with_link(int i, int j, bool on) const {
  require_neighbours(*this, i, j);
  RegisterState s = *this;
  s.links[static_cast<std::size_t>(std::min(i, j))].on = on;
  return s;
}

double RegisterState::prob_plus(int q) const {
  require_qubit(*this, q);
  double p = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k)
    if (k & bit(q)) p += abs2(amps[k]);
  return p;
}

std::vector<double> RegisterState::probabilities() const {
  std::vector<double> p(amps.size());
  std::transform(amps.begin(), amps.end(), p.begin(), [](cplx a) { return abs2(a); });
  return p;
}

namespace gates {

Mat2 identity() { return Mat2::identity(); }
Mat2 x() { return pauli::x(); }
Mat2 y() { return pauli::y(); }
Mat2 z() { return pauli::z(); }

Mat2 hadamard() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {{r, r, r, -r}};
}

Mat2 symmetric() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {{r, r, -r, r}};
}

Mat2 s() { return {{1.0, 0.0, 0.0, kI}}; }

Mat2 t() { return {{1.0, 0.0, 0.0, std::exp(kI * (std::numbers::pi / 4))}}; }

Mat2 rz(double angle) {
  return {{std::exp(kI * (0.5 * angle)), 0.0, 0.0, std::exp(-kI * (0.5 * angle))}};
}

Mat2 named(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up == "I") return identity();
  if (up == "X") return x();
  if (up == "Y") return y();
  if (up == "Z") return z();
  if (up == "H") return hadamard();
  if (up == "SYM") return symmetric();
  if (up == "S") return s();
  if (up == "SDG") return adjoint(s());
  if (up == "T") return t();
  if (up == "TDG") return adjoint(t());
  throw Error(ErrorKind::InvalidParams, "unknown gate '" + std::string(name) + "'");
}

Mat4 cnot() {
  Mat4 m;
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Mat4 swap() {
  Mat4 m;
  m(0, 0) = m(3, 3) = 1.0;
  m(1, 2) = m(2, 1) = 1.0;
  return m;
}

}  // namespace gates

Mat4 exchange_unitary(double theta) {
  // sigma.sigma = 2 SWAP - 1 and SWAP^2 = 1.
  const cplx phase = std::exp(kI * (0.25 * theta));
  const cplx c = phase * std::cos(0.5 * theta);
  const cplx s = -kI * phase * std::sin(0.5 * theta);
  Mat4 u;
  const Mat4 sw = gates::swap();
  for (std::size_t k = 0; k < 16; ++k) u.a[k] = s * sw.a[k];
  for (std::size_t k = 0; k < 4; ++k) u(k, k) += c;
  return u;
}

RegisterState apply_single_gate(const RegisterState& state, int q, const Mat2& gate) {
  require_qubit(state, q);
  if (unitarity_error(gate) > kUnitaryTolerance)
    throw Error(ErrorKind::NotUnitary, "single-qubit gate is not unitary");
  RegisterState out = state;
  const std::size_t mask = bit(q);
  for (std::size_t k = 0; k < out.amps.size(); ++k) {
    if (k & mask) continue;
    const cplx a0 = state.amps[k];
    const cplx a1 = state.amps[k | mask];
    out.amps[k] = gate(0, 0) * a0 + gate(0, 1) * a1;
    out.amps[k | mask] = gate(1, 0) * a0 + gate(1, 1) * a1;
  }
  return out;
}

RegisterState apply_two_qubit(const RegisterState& state, int i, int j, const Mat4& gate) {
  require_qubit(state, i);
  require_qubit(state, j);
  if (i == j) throw Error(ErrorKind::IndexOutOfRange, "two-qubit gate needs distinct qubits");
  if (unitarity_error(gate) > kUnitaryTolerance)
    throw Error(ErrorKind::NotUnitary, "two-qubit gate is not unitary");
  RegisterState out = state;
  const std::size_t mi = bit(i);
  const std::size_t mj = bit(j);
  for (std::size_t k = 0; k < out.amps.size(); ++k) {
    if (k & (mi | mj)) continue;
    const std::array<std::size_t, 4> idx{k, k | mj, k | mi, k | mi | mj};
    std::array<cplx, 4> in;
    for (std::size_t r = 0; r < 4; ++r) in[r] = state.amps[idx[r]];
    for (std::size_t r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (std::size_t c = 0; c < 4; ++c) acc += gate(r, c) * in[c];
      out.amps[idx[r]] = acc;
    }
  }
  return out;
}

RegisterState exchange_pulse(const RegisterState& state, const CouplingLink& link,
                             double pulse_area) {
  link.validate();
  require_neighbours(state, link.i, link.j);
  if (!link.on) {
    std::ostringstream msg;
    msg << "weak link " << link.i << "-" << link.j << " is off";
    throw Error(ErrorKind::LinkOff, msg.str());
  }
  if (!(pulse_area >= 0.0) || !std::isfinite(pulse_area))
    throw Error(ErrorKind::InvalidParams, "pulse area must be >= 0");
  return apply_two_qubit(state, link.i, link.j, exchange_unitary(pulse_area));
}

RegisterState cnot_composed(const RegisterState& state, int control, int target) {
  require_neighbours(state, control, target);
  CouplingLink link = state.link(control, target);
  // Exchange is symmetric in the pair, so the link orientation does not matter.
  constexpr double kHalfSwap = std::numbers::pi / 2;
  RegisterState s = apply_single_gate(state, target, gates::hadamard());
  s = exchange_pulse(s, link, kHalfSwap);
  s = apply_single_gate(s, control, gates::rz(std::numbers::pi));
  s = exchange_pulse(s, link, kHalfSwap);
  s = apply_single_gate(s, control, gates::rz(-std::numbers::pi / 2));
  s = apply_single_gate(s, target, gates::rz(std::numbers::pi / 2));
  return apply_single_gate(s, target, gates::hadamard());
}

Mat4 cnot_composed_unitary() {
  const Mat4 half = exchange_unitary(std::numbers::pi / 2);
  const Mat2 id = Mat2::identity();
  const Mat4 h_t = kron(id, gates::hadamard());
  return h_t * kron(gates::rz(-std::numbers::pi / 2), gates::rz(std::numbers::pi / 2)) * half *
         kron(gates::rz(std::numbers::pi), id) * half * h_t;
}

RegisterState selective_rf_pulse(const RegisterState& state, const FieldProfile& profile,
                                 int target, double amp, double duration, double dt) {
  require_qubit(state, target);
  if (profile.eps.size() != static_cast<std::size_t>(state.n))
    throw Error(ErrorKind::InvalidParams, "field profile length must equal register size");
  for (double e : profile.eps)
    if (!std::isfinite(e)) throw Error(ErrorKind::InvalidParams, "field profile must be finite");
  if (!(amp >= 0.0) || !std::isfinite(amp))
    throw Error(ErrorKind::InvalidParams, "RF amplitude must be >= 0");
  if (!(duration >= 0.0) || !std::isfinite(duration))
    throw Error(ErrorKind::InvalidParams, "RF duration must be >= 0");
  for (const auto& l : state.links)
    if (l.on) {
      std::ostringstream msg;
      msg << "weak link " << l.i << "-" << l.j << " must be off during an RF pulse";
      throw Error(ErrorKind::LinksActive, msg.str());
    }
  if (amp == 0.0) return state;

  for (std::size_t a = 0; a < profile.eps.size(); ++a)
    for (std::size_t b = a + 1; b < profile.eps.size(); ++b)
      if (std::abs(profile.eps[a] - profile.eps[b]) < 5.0 * amp) {
        std::ostringstream msg;
        msg << "biases of qubits " << a << " and " << b << " differ by "
            << std::abs(profile.eps[a] - profile.eps[b]) << " < 5 * amp = " << 5.0 * amp;
        throw Error(ErrorKind::InsufficientGradient, msg.str());
      }

  // With every link off the qubits evolve independently.
  const double omega = 2.0 * std::abs(profile.eps[static_cast<std::size_t>(target)]);
  RegisterState out = state;
  for (int q = 0; q < state.n; ++q) {
    TwoLevelParams p;
    p.epsilon = profile.eps[static_cast<std::size_t>(q)];
    p.drive_amp = amp;
    p.drive_freq = omega;
    out = apply_single_gate(out, q, drive_propagator(p, duration, dt));
  }
  return out;
}

RegisterState initialize_reset(const RegisterState& state, int q, int value) {
  require_qubit(state, q);
  if (value != 1 && value != -1) throw Error(ErrorKind::InvalidParams, "reset value must be +-1");
  const std::size_t mask = bit(q);
  const bool want_plus = value == 1;
  double weight = 0.0;
  for (std::size_t k = 0; k < state.amps.size(); ++k)
    if (static_cast<bool>(k & mask) == want_plus) weight += abs2(state.amps[k]);

  RegisterState out = state;
  if (weight > 1e-20) {
    const double scale = 1.0 / std::sqrt(weight);
    for (std::size_t k = 0; k < out.amps.size(); ++k)
      out.amps[k] = static_cast<bool>(k & mask) == want_plus ? state.amps[k] * scale : 0.0;
    return out;
  }
  // Qubit q is entirely in the other state: move its factor across.
  for (std::size_t k = 0; k < out.amps.size(); ++k) out.amps[k] = state.amps[k ^ mask];
  return out;
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Measurement measure(const RegisterState& state, int q, Rng& rng) {
  const double p_plus = state.prob_plus(q);
  const int outcome = uniform01(rng) < p_plus ? 1 : -1;
  const std::size_t mask = bit(q);
  const bool keep_plus = outcome == 1;
  const double weight = keep_plus ? p_plus : 1.0 - p_plus;
  Measurement m{outcome, state};
  const double scale = 1.0 / std::sqrt(weight);
  for (std::size_t k = 0; k < m.state.amps.size(); ++k)
    m.state.amps[k] = static_cast<bool>(k & mask) == keep_plus ? state.amps[k] * scale : 0.0;
  return m;
}

Measurement measure(const RegisterState& state, int q, std::uint64_t seed) {
  Rng rng(seed);
  return measure(state, q, rng);
}

double hall_voltage(int outcome, double v0) {
  if (outcome != 1 && outcome != -1) throw Error(ErrorKind::InvalidParams, "outcome must be +-1");
  if (!(v0 > 0.0)) throw Error(ErrorKind::InvalidParams, "v0 must be > 0");
  return outcome * v0;
}

double expected_hall_voltage(const RegisterState& state, int q, double v0) {
  if (!(v0 > 0.0)) throw Error(ErrorKind::InvalidParams, "v0 must be > 0");
  return v0 * (2.0 * state.prob_plus(q) - 1.0);
}

}  // namespace chiralq
