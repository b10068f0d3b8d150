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

#include "chiralq/kspace.hpp"

#include <cmath>
#include <sstream>

#include "chiralq/error.hpp"

namespace chiralq {

void GapParams::validate() const {
  if (!std::isfinite(delta) || !std::isfinite(mu))
    throw Error(ErrorKind::InvalidParams, "gap parameters must be finite");
  if (delta < 0.0) throw Error(ErrorKind::InvalidParams, "delta must be >= 0");
  if (chi != Chirality::Plus && chi != Chirality::Minus)
    throw Error(ErrorKind::InvalidParams, "chi must be +1 or -1");
}

GapParams make_gap_params(double delta, double mu, int chi) {
  if (chi != 1 && chi != -1) {
    std::ostringstream msg;
    msg << "chi must be +1 or -1, got " << chi;
    throw Error(ErrorKind::InvalidParams, msg.str());
  }
  GapParams p{delta, mu, chi > 0 ? Chirality::Plus : Chirality::Minus};
  p.validate();
  return p;
}

double MVector::norm() const { return std::sqrt(mx * mx + my * my + mz * mz); }

std::complex<double> d_z(Momentum k, const GapParams& params) {
  if (params.mu <= 0.0)
    throw Error(ErrorKind::NonpositiveMu, "kF normalization needs mu > 0");
  const double kf = std::sqrt(params.mu);
  const double c = static_cast<double>(sign(params.chi));
  return {params.delta * k.kx / kf, params.delta * c * k.ky / kf};
}

double dispersion(Momentum k, const GapParams& params) {
  return k.kx * k.kx + k.ky * k.ky - params.mu;
}

MVector texture(Momentum k, const GapParams& params) {
  const double scale = params.mu > 0.0 ? params.delta / std::sqrt(params.mu) : params.delta;
  const double c = static_cast<double>(sign(params.chi));
  return {scale * k.kx, scale * c * k.ky, dispersion(k, params)};
}

MVector m_hat(Momentum k, const GapParams& params) {
  const MVector m = texture(k, params);
  const double n = m.norm();
  if (!(n > 0.0)) {
    std::ostringstream msg;
    msg << "texture vanishes at k = (" << k.kx << ", " << k.ky << ")";
    throw Error(ErrorKind::ZeroTexture, msg.str());
  }
  return {m.mx / n, m.my / n, m.mz / n};
}

}  // namespace chiralq
