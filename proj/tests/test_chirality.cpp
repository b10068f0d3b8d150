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

#include <cmath>
#include <numbers>
#include <random>

#include "chiralq/chirality.hpp"
#include "chiralq/error.hpp"
#include "doctest.h"

using namespace chiralq;

namespace {

GapParams gp(double delta, double mu, int chi) { return make_gap_params(delta, mu, chi); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidParams;
}

}  // namespace

TEST_CASE("quadrature worked examples") {
  auto r = chern_quadrature(gp(1, 1, +1), 8.0, 256);
  CHECK(r.n_integer == 1);
  CHECK(r.residual < kConvergenceTolerance);
  CHECK(r.grid_size == 256);
  CHECK(r.k_max == 8.0);
  r = chern_quadrature(gp(1, 1, -1), 8.0, 256);
  CHECK(r.n_integer == -1);
  r = chern_quadrature(gp(1, -1, +1), 8.0, 256);
  CHECK(r.n_integer == 0);
}

TEST_CASE("plaquette worked examples") {
  auto r = chern_plaquette(gp(0.5, 1, +1), 8.0, 128);
  CHECK(r.n_integer == 1);
  CHECK(r.residual < 1e-6);
  for (double delta : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    CAPTURE(delta);
    const auto p = gp(delta, 1, +1);
    r = chern_plaquette(p, default_k_max(p), 128);
    CHECK(r.n_integer == 1);
    CHECK(r.residual < 1e-6);
  }
}

TEST_CASE("mu = 0 is refused as non-convergent") {
  CHECK(kind_of([] { chern_plaquette(gp(1, 0, +1), 8.0, 128); }) == ErrorKind::NotConverged);
  CHECK(kind_of([] { chern_quadrature(gp(1, 0, +1), 8.0, 128); }) == ErrorKind::NotConverged);
}

TEST_CASE("gapless and invalid inputs") {
  CHECK(kind_of([] { chern_plaquette(gp(0, 1, +1), 8.0, 128); }) == ErrorKind::GaplessTexture);
  CHECK(kind_of([] { chern_quadrature(gp(0, 1, +1), 8.0, 128); }) == ErrorKind::GaplessTexture);
  CHECK(kind_of([] { chern_plaquette(gp(1, 1, +1), 8.0, 8); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { chern_plaquette(gp(1, 1, +1), 8.0, 100000); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { chern_plaquette(gp(1, 1, +1), 1.0, 128); }) == ErrorKind::InvalidParams);
}

TEST_CASE("near-gapless texture trips the degenerate-plaquette guard") {
  // m_hat flips from -z to +z between neighbouring nodes across the Fermi circle.
  CHECK(kind_of([] { chern_plaquette(gp(1e-13, 1, +1), 8.0, 64); }) ==
        ErrorKind::DegeneratePlaquette);
}

TEST_CASE("triangle solid angle") {
  const MVector x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
  CHECK(triangle_solid_angle(x, y, z) == doctest::Approx(std::numbers::pi / 2));
  CHECK(triangle_solid_angle(y, x, z) == doctest::Approx(-std::numbers::pi / 2));
  CHECK(triangle_solid_angle(x, x, z) == doctest::Approx(0.0));
  // Small triangle: area ~ flat-triangle area.
  const double e = 1e-3;
  const MVector a{0, 0, 1};
  const MVector b{e, 0, std::sqrt(1 - e * e)};
  const MVector c{0, e, std::sqrt(1 - e * e)};
  CHECK(triangle_solid_angle(a, b, c) == doctest::Approx(0.5 * e * e).epsilon(1e-5));
}

TEST_CASE("cross validation worked examples") {
  auto cv = cross_validate(gp(1, 1, +1));
  CHECK(cv.quadrature.n_integer == 1);
  CHECK(cv.plaquette.n_integer == 1);
  cv = cross_validate(gp(1, -0.5, +1));
  CHECK(cv.quadrature.n_integer == 0);
  CHECK(cv.plaquette.n_integer == 0);
}

TEST_CASE("sharp texture: quadrature against plaquette at 512") {
  const auto p = gp(0.2, 4, -1);
  const auto oracle = chern_plaquette(p, default_k_max(p), 512);
  CHECK(oracle.n_integer == -1);
  const auto cv = cross_validate(p);
  CHECK(cv.quadrature.n_integer == oracle.n_integer);
  CHECK(cv.plaquette.n_integer == oracle.n_integer);
}

TEST_CASE("property: quantization over random gapped parameters") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> mag(0.2, 4.0);
  std::uniform_real_distribution<double> gap(0.1, 5.0);
  for (int i = 0; i < 20; ++i) {
    const double mu = (i % 3 == 0 ? -1.0 : 1.0) * mag(rng);
    const double delta = gap(rng);
    const int chi = (rng() & 1) ? 1 : -1;
    const auto p = gp(delta, mu, chi);
    CAPTURE(mu);
    CAPTURE(delta);
    CAPTURE(chi);
    const auto r = chern_plaquette(p, default_k_max(p), 256);
    CHECK(r.residual < 1e-6);
  }
}

TEST_CASE("property: sign antisymmetry") {
  for (double mu : {-1.5, 0.3, 1.0, 3.0}) {
    for (double delta : {0.3, 1.0, 4.0}) {
      CAPTURE(mu);
      CAPTURE(delta);
      const auto plus = gp(delta, mu, +1);
      const auto minus = gp(delta, mu, -1);
      const double k = default_k_max(plus);
      CHECK(chern_plaquette(minus, k, 256).n_integer == -chern_plaquette(plus, k, 256).n_integer);
    }
  }
  const auto q_plus = chern_quadrature(gp(1, 1, +1), 8.0, 256);
  const auto q_minus = chern_quadrature(gp(1, 1, -1), 8.0, 256);
  CHECK(q_minus.n_integer == -q_plus.n_integer);
  CHECK(q_minus.raw == doctest::Approx(-q_plus.raw).epsilon(1e-12));
}

TEST_CASE("property: scale invariance in delta") {
  for (double mu : {0.5, 2.0}) {
    for (double base : {0.5, 1.0, 2.0}) {
      const auto p = gp(base, mu, +1);
      const int n0 = chern_plaquette(p, default_k_max(p), 256).n_integer;
      for (double c : {0.1, 10.0}) {
        CAPTURE(mu);
        CAPTURE(base);
        CAPTURE(c);
        const auto q = gp(c * base, mu, +1);
        const auto r = chern_plaquette(q, default_k_max(q), 512);
        CHECK(r.residual < 1e-6);
        CHECK(r.n_integer == n0);
      }
    }
  }
}

TEST_CASE("property: transition across mu = 0") {
  for (double mu : {-2.0, -0.5, 0.5, 2.0}) {
    for (int chi : {-1, 1}) {
      const auto p = gp(1.0, mu, chi);
      CHECK(chern_plaquette(p, default_k_max(p), 256).n_integer == (mu > 0 ? chi : 0));
    }
  }
}

TEST_CASE("property: method agreement at matched grids") {
  for (double mu : {-1.0, 1.0, 2.0}) {
    for (double delta : {0.5, 1.0, 2.0}) {
      CAPTURE(mu);
      CAPTURE(delta);
      const auto p = gp(delta, mu, +1);
      const double k = default_k_max(p);
      const auto q = chern_quadrature(p, k, 256);
      const auto pl = chern_plaquette(p, k, 256);
      CHECK(std::abs(q.raw - pl.raw) < 1e-2);
      CHECK(q.n_integer == pl.n_integer);
    }
  }
}
