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

#include "chiralq/device.hpp"
#include "chiralq/error.hpp"
#include "doctest.h"

using namespace chiralq;
using namespace chiralq::device;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidParams;
}

MaterialParams with_mass(double m) {
  MaterialParams p;
  p.mass_ratio = m;
  return p;
}

}  // namespace

TEST_CASE("Zeeman splitting worked examples") {
  const double one = zeeman_splitting(1.0, with_mass(4.0));
  CHECK(one == doctest::Approx(5.7883818060e-5 * 1e-4 / 4.0).epsilon(1e-14));
  CHECK(one == doctest::Approx(1.447e-9).epsilon(1e-3));
  CHECK(zeeman_splitting(0.5, with_mass(4.0)) == doctest::Approx(0.5 * one).epsilon(1e-15));
  CHECK(zeeman_splitting(1.0, with_mass(1.0)) == doctest::Approx(5.788e-9).epsilon(1e-3));
}

TEST_CASE("pair budget worked examples") {
  MaterialParams p;
  const auto n = max_pair_number(p, 1.45e-9);
  CHECK(n == 344827);
  CHECK(max_pair_number(p, p.gap_ev) == 1);
  p.gap_ev = 1e-3;
  CHECK(max_pair_number(p, 1e-9) == 1000000);
  CHECK(max_pair_number(p, 2e-3) == 0);
}

TEST_CASE("geometry worked examples") {
  MaterialParams p;
  auto g = max_volume(p, 1000000);
  CHECK(g.volume_a3 == doctest::Approx(1e8));
  CHECK(g.lz_a == 100.0);
  CHECK(g.lx_a == doctest::Approx(1000.0));
  CHECK(g.ly_a == doctest::Approx(1000.0));
  CHECK(g.within_lambda);
  g = max_volume(p, 1);
  CHECK(g.volume_a3 == p.cell_volume_a3);
  CHECK(g.lx_a == doctest::Approx(1.0));
  // A large budget spreads past the penetration depth.
  CHECK_FALSE(max_volume(p, 100000000).within_lambda);
}

TEST_CASE("default estimate") {
  const auto r = estimate(1.0, MaterialParams{});
  CHECK(r.eps_ev >= 1e-9);
  CHECK(r.eps_ev <= 2e-9);
  CHECK(r.n_pairs >= 100000);
  CHECK(r.n_pairs <= 10000000);
  CHECK(r.geometry.volume_a3 >= 1e7);
  CHECK(r.geometry.volume_a3 <= 1e9);
  CHECK(r.geometry.within_lambda);
}

TEST_CASE("device preconditions") {
  CHECK(kind_of([] { zeeman_splitting(0.0, MaterialParams{}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { zeeman_splitting(-1.0, MaterialParams{}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { zeeman_splitting(1.0, with_mass(0.0)); }) == ErrorKind::InvalidParams);
  MaterialParams thick;
  thick.film_thickness_a = 1000.0;
  CHECK(kind_of([&] { max_volume(thick, 10); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { max_pair_number(MaterialParams{}, 0.0); }) == ErrorKind::InvalidParams);
  // A field so strong one pair's splitting exceeds the gap.
  CHECK(kind_of([] { estimate(1e6, MaterialParams{}); }) == ErrorKind::GeometryInfeasible);
}

TEST_CASE("property: monotonicity and linearity") {
  const MaterialParams p;
  double prev_eps = 0.0;
  std::uint64_t prev_n = ~std::uint64_t{0};
  for (double h = 0.1; h < 100.0; h *= 1.7) {
    const double e = zeeman_splitting(h, p);
    CHECK(e > prev_eps);
    CHECK(e == doctest::Approx(h * zeeman_splitting(1.0, p)).epsilon(1e-14));
    const auto n = max_pair_number(p, e);
    CHECK(n <= prev_n);
    prev_eps = e;
    prev_n = n;
  }
  double prev_v = 0.0;
  for (std::uint64_t n = 1; n < 100000000; n *= 7) {
    const double v = max_volume(p, n).volume_a3;
    CHECK(v > prev_v);
    CHECK(v == doctest::Approx(double(n) * p.cell_volume_a3));
    prev_v = v;
  }
}

TEST_CASE("property: unit round trip") {
  for (double g : {1e-3, 0.5, 1.0, 7.25, 1e4}) CHECK(std::abs(tesla_to_gauss(gauss_to_tesla(g)) - g) <= 1e-15 * g);
}

TEST_CASE("property: each estimate within an order of magnitude") {
  const auto r = estimate(1.0, MaterialParams{});
  CHECK(std::abs(std::log10(r.eps_ev / 1e-9)) <= 1.0);
  CHECK(std::abs(std::log10(double(r.n_pairs) / 1e6)) <= 1.0);
  CHECK(std::abs(std::log10(r.geometry.volume_a3 / 1e8)) <= 1.0);
  CHECK(std::abs(std::log10(r.geometry.lx_a / 1000.0)) <= 1.0);
  CHECK(r.geometry.lz_a == 100.0);
}
