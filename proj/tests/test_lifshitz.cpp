// Copyright (c) 2026 the lvdw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "lvdw/constants.hpp"
#include "lvdw/lifshitz.hpp"
#include "lvdw/material_db.hpp"

using namespace lvdw;

namespace {

const QuadratureSpec kQuad{};

DielectricModel water_model() {
  return MaterialDatabase::load_directory(LVDW_MATERIALS_DIR).find("water").model;
}

}  // namespace

TEST_CASE("transverse decay constant") {
  CHECK(kz(1.0, 0.0, 0.05) == 0.05);
  const double zeta = 3.21;
  CHECK(kz(1.77, zeta, 0.0) ==
        doctest::Approx(std::sqrt(1.77) * zeta / constants::hbar_c_eV_nm).epsilon(1e-15));
  // zeta chosen so zeta/hbar_c = 1/nm
  CHECK(kz(1.0, 197.3269804, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("reflection coefficients: interface limits and bounds") {
  for (auto pol : {Polarization::S, Polarization::P}) {
    CHECK(fresnel(pol, 3.0, 3.0, 1.0, 0.5) == 0.0);
    CHECK(fresnel(pol, 1.0, 1.0, 0.0, 0.1) == 0.0);
  }
  // static limit: s vanishes, p reduces to the permittivity contrast
  CHECK(fresnel(Polarization::S, 2.0, 8.0, 0.0, 0.3) == 0.0);
  CHECK(fresnel(Polarization::P, 2.0, 8.0, 0.0, 0.3) ==
        doctest::Approx((8.0 - 2.0) / (8.0 + 2.0)).epsilon(1e-15));

  // |r| < 1 across a wide parameter sweep
  for (double ei : {1.0, 2.5, 80.0, 1e6})
    for (double ej : {1.0, 4.0, 1e3, 1e8})
      for (double zeta : {0.0, 0.5, 40.0})
        for (double Q : {0.0, 1e-3, 2.0}) {
          if (zeta == 0.0 && Q == 0.0) continue;
          for (auto pol : {Polarization::S, Polarization::P}) {
            const double r = fresnel(pol, ei, ej, zeta, Q);
            CHECK(std::fabs(r) < 1.0);
          }
        }
}

TEST_CASE("reflection kernel: ideal value and overflow-free tail") {
  const double y = 1.7;
  CHECK(reflection_kernel(1.0, y) ==
        doctest::Approx(std::exp(-y) / (1.0 - std::exp(-y))).epsilon(1e-15));
  CHECK(reflection_kernel(-0.5, 0.3) < 0.0);
  // huge y underflows cleanly to zero
  CHECK(reflection_kernel(1.0, 2000.0) == 0.0);
}

TEST_CASE("force integrand vanishes when a slab is index-matched to the gap") {
  LayerStack stack(DielectricModel::constant(1.77), DielectricModel::constant(4.0),
                   DielectricModel::constant(1.77), 25.0);
  for (double zeta : {0.0, 0.2, 5.0})
    for (double Q : {1e-3, 0.1, 1.0}) {
      CHECK(integrand(stack, Polarization::S, zeta, Q, kQuad) == 0.0);
      CHECK(integrand(stack, Polarization::P, zeta, Q, kQuad) == 0.0);
    }
}

TEST_CASE("force integrand is exponentially cut off at 2 k3 d = 40") {
  LayerStack stack(DielectricModel::constant(1e6), DielectricModel::constant(1e6),
                   DielectricModel::vacuum(), 100.0);
  const double Q = 0.2;  // k3 = 0.2/nm at zeta = 0, so 2*k3*d = 40
  const double k3 = kz(1.0, 0.0, Q);
  const double bound = Q * k3 * std::exp(-40.0) / (1.0 - std::exp(-40.0));
  for (auto pol : {Polarization::S, Polarization::P}) {
    const double v = integrand(stack, pol, 0.0, Q, kQuad);
    CHECK(std::fabs(v) <= bound * (1.0 + 1e-12));
  }
}

TEST_CASE("force integrand approaches the unit-reflectivity form for huge permittivity") {
  const double d = 10.0, zeta = 19.73269804, Q = 0.1;
  LayerStack stack(DielectricModel::constant(1e12), DielectricModel::constant(1e12),
                   DielectricModel::vacuum(), d);
  const double k3 = kz(1.0, zeta, Q);
  const double y = 2.0 * k3 * d;
  const double ideal = Q * k3 * std::exp(-y) / (1.0 - std::exp(-y));
  for (auto pol : {Polarization::S, Polarization::P})
    CHECK(integrand(stack, pol, zeta, Q, kQuad) == doctest::Approx(ideal).epsilon(1e-4));
}

TEST_CASE("perfect-mirror benchmark") {
  // pi^2 hbar c / (240 d^4) at d = 100 nm
  CHECK(ideal_mirror_force(100.0) == doctest::Approx(13.001257728536).epsilon(1e-10));
  CHECK(ideal_mirror_force(200.0) == doctest::Approx(13.001257728536 / 16.0).epsilon(1e-10));
  CHECK(ideal_mirror_force(100.0) / ideal_mirror_force(200.0) ==
        doctest::Approx(16.0).epsilon(1e-14));
  CHECK_THROWS_AS(ideal_mirror_force(0.0), std::domain_error);
}

TEST_CASE("huge-permittivity mirrors reach the benchmark from below") {
  LayerStack stack(DielectricModel::constant(1e8), DielectricModel::constant(1e8),
                   DielectricModel::vacuum(), 100.0);
  const double F = force_per_area(stack, kQuad);
  const double ideal = ideal_mirror_force(100.0);
  CHECK(F < ideal);
  CHECK(F == doctest::Approx(ideal).epsilon(5e-3));
}

TEST_CASE("the mirror limit is approached monotonically in the permittivity") {
  const double ideal = ideal_mirror_force(100.0);
  double prev = 0.0;
  for (double eps : {1e2, 1e4, 1e6, 1e8}) {
    LayerStack stack(DielectricModel::constant(eps), DielectricModel::constant(eps),
                     DielectricModel::vacuum(), 100.0);
    const double F = force_per_area(stack, kQuad);
    CHECK(F > prev);
    CHECK(F < ideal);
    prev = F;
  }
}

TEST_CASE("index-matched slab kills the force exactly") {
  LayerStack stack(DielectricModel::constant(1.77), DielectricModel::constant(30.0),
                   DielectricModel::constant(1.77), 50.0);
  CHECK(force_per_area(stack, kQuad) == 0.0);
}

TEST_CASE("force is symmetric under exchanging the two slabs") {
  DielectricModel a = DielectricModel::constant(11.0);
  DielectricModel b = DielectricModel::drude(builtin_table1(1.0));
  DielectricModel gap = DielectricModel::constant(1.77);
  LayerStack ab(a, b, gap, 40.0);
  LayerStack ba(b, a, gap, 40.0);
  CHECK(force_per_area(ab, kQuad) == force_per_area(ba, kQuad));
}

TEST_CASE("eps1 < eps3 < eps2 at all frequencies gives repulsion") {
  LayerStack stack(DielectricModel::constant(2.0), DielectricModel::constant(8.0),
                   DielectricModel::constant(4.0), 30.0);
  CHECK(force_per_area(stack, kQuad) < 0.0);
}

TEST_CASE("attraction decays monotonically with separation") {
  DielectricModel slab = DielectricModel::constant(10.0);
  double prev = std::numeric_limits<double>::infinity();
  for (double d : {10.0, 30.0, 100.0, 300.0, 1000.0}) {
    LayerStack stack(slab, slab, DielectricModel::vacuum(), d);
    const double F = force_per_area(stack, kQuad);
    CHECK(F > 0.0);
    CHECK(F < prev);
    prev = F;
  }
}

TEST_CASE("mirror stack follows the d^-4 law over one decade") {
  DielectricModel mirror = DielectricModel::constant(1e8);
  DielectricModel vac = DielectricModel::vacuum();
  const auto curve = force_curve(mirror, mirror, vac, std::vector<double>{50.0, 100.0, 200.0},
                                 kQuad);
  CHECK(curve.points[0].value / curve.points[1].value == doctest::Approx(16.0).epsilon(0.01));
  CHECK(curve.points[1].value / curve.points[2].value == doctest::Approx(16.0).epsilon(0.01));
}

TEST_CASE("halving the tolerance shifts the force by less than the old tolerance") {
  DielectricModel au = DielectricModel::drude(builtin_table1(1.0));
  LayerStack stack(au, au, DielectricModel::vacuum(), 25.0);
  QuadratureSpec tighter = kQuad;
  tighter.rel_tol = 0.5 * kQuad.rel_tol;
  const double a = force_per_area(stack, kQuad);
  const double b = force_per_area(stack, tighter);
  CHECK(std::fabs(a - b) / std::fabs(b) < kQuad.rel_tol);
}

TEST_CASE("gold slabs across water: pinned values") {
  // regression values from this implementation, cross-checked against a
  // 2000x2000 trapezoidal evaluation to ~1e-5 (see the acceptance suite)
  DielectricModel au = DielectricModel::drude(builtin_table1(1.33));
  DielectricModel water = water_model();
  struct Ref {
    double d, F;
  };
  for (const Ref& ref : {Ref{10.0, 3.1234734417e4}, Ref{50.0, 5.7780157199e1},
                         Ref{100.0, 4.6678212539e0}}) {
    LayerStack stack(au, au, water, ref.d);
    CHECK(force_per_area(stack, kQuad) == doctest::Approx(ref.F).epsilon(1e-4));
  }
}

TEST_CASE("force curves: shape, metadata and failure reporting") {
  DielectricModel slab = DielectricModel::constant(4.0);
  DielectricModel vac = DielectricModel::vacuum();

  const auto single = force_curve(slab, slab, vac, std::vector<double>{75.0}, kQuad);
  CHECK(single.points.size() == 1);
  LayerStack stack(slab, slab, vac, 75.0);
  CHECK(single.points[0].value == force_per_area(stack, kQuad));
  CHECK(single.kind == CurveKind::PressurePa);
  CHECK(!single.stack_description.empty());
  CHECK(!single.quad_hash.empty());

  const auto empty = force_curve(slab, slab, vac, std::vector<double>{}, kQuad);
  CHECK(empty.points.empty());

  CHECK_THROWS_AS(force_curve(slab, slab, vac, std::vector<double>{50.0, 50.0}, kQuad),
                  std::invalid_argument);
  CHECK_THROWS_AS(force_curve(slab, slab, vac, std::vector<double>{-1.0, 50.0}, kQuad),
                  std::invalid_argument);

  QuadratureSpec starved = kQuad;
  starved.max_evals = 60;
  try {
    force_curve(slab, slab, vac, std::vector<double>{10.0, 20.0}, starved);
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("separation 10") != std::string::npos);
  }
}

TEST_CASE("percent difference") {
  CHECK(percent_difference(123.4, 123.4) == 0.0);
  CHECK(percent_difference(100.0, 85.0) == doctest::Approx(15.0).epsilon(1e-14));
  CHECK(percent_difference(2.0, 3.0) == doctest::Approx(50.0).epsilon(1e-14));
  CHECK_THROWS_AS(percent_difference(0.0, 1.0), std::domain_error);
}

TEST_CASE("identical parameter rows give an identically zero difference curve") {
  const DrudeParams row = builtin_table1(1.0);
  const auto curve = delta_curve(DielectricModel::constant(1.77), row, row,
                                 std::vector<double>{10.0, 100.0}, kQuad);
  CHECK(curve.kind == CurveKind::DeltaPercent);
  REQUIRE(curve.points.size() == 2);
  CHECK(curve.points[0].value == 0.0);
  CHECK(curve.points[1].value == 0.0);
}

TEST_CASE("separation must be positive") {
  CHECK_THROWS_AS(LayerStack(DielectricModel::vacuum(), DielectricModel::vacuum(),
                             DielectricModel::vacuum(), 0.0),
                  std::invalid_argument);
}
