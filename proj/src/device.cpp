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

#include "chiralq/device.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "chiralq/error.hpp"

namespace chiralq::device {

void MaterialParams::validate() const {
  for (double v : {gap_ev, mass_ratio, cell_volume_a3, lambda_l_a, film_thickness_a})
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorKind::InvalidParams, "material parameters must be finite and > 0");
  if (film_thickness_a >= kMaxFilmThicknessA) {
    std::ostringstream msg;
    msg << "film thickness " << film_thickness_a << " A is not below " << kMaxFilmThicknessA << " A";
    throw Error(ErrorKind::InvalidParams, msg.str());
  }
}

double zeeman_splitting(double h_gauss, const MaterialParams& params) {
  params.validate();
  if (!(h_gauss > 0.0) || !std::isfinite(h_gauss))
    throw Error(ErrorKind::InvalidParams, "field must be > 0 gauss");
  return kBohrMagnetonEvPerTesla / params.mass_ratio * gauss_to_tesla(h_gauss);
}

std::uint64_t max_pair_number(const MaterialParams& params, double eps_ev) {
  params.validate();
  if (!(eps_ev > 0.0) || !std::isfinite(eps_ev))
    throw Error(ErrorKind::InvalidParams, "splitting must be > 0 eV");
  const double ratio = std::floor(params.gap_ev / eps_ev);
  if (ratio >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
    throw Error(ErrorKind::InvalidParams, "pair budget overflows");
  return static_cast<std::uint64_t>(ratio);
}

Geometry max_volume(const MaterialParams& params, std::uint64_t n_pairs) {
  params.validate();
  if (n_pairs < 1) throw Error(ErrorKind::InvalidParams, "need at least one pair");
  Geometry g;
  g.volume_a3 = static_cast<double>(n_pairs) * params.cell_volume_a3;
  g.lz_a = params.film_thickness_a;
  const double side = std::sqrt(g.volume_a3 / g.lz_a);
  if (!(side > 0.0) || !std::isfinite(side)) {
    std::ostringstream msg;
    msg << "no lateral size spreads " << g.volume_a3 << " A^3 over a " << g.lz_a << " A film";
    throw Error(ErrorKind::GeometryInfeasible, msg.str());
  }
  g.lx_a = g.ly_a = side;
  g.within_lambda = g.lx_a < params.lambda_l_a && g.lz_a < params.lambda_l_a;
  return g;
}

Report estimate(double h_gauss, const MaterialParams& params) {
  Report r;
  r.h_gauss = h_gauss;
  r.eps_ev = zeeman_splitting(h_gauss, params);
  r.n_pairs = max_pair_number(params, r.eps_ev);
  if (r.n_pairs < 1)
    throw Error(ErrorKind::GeometryInfeasible, "splitting exceeds the gap: not even one pair fits");
  r.geometry = max_volume(params, r.n_pairs);
  return r;
}

}  // namespace chiralq::device
