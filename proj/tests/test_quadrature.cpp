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

#include "lvdw/quadrature.hpp"

using namespace lvdw;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("finite intervals: smooth integrands") {
  auto r = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-10, 1e-14, 10000);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, pi, 1e-10, 1e-14, 10000);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("open rule handles an integrable endpoint singularity") {
  auto r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-9,
                              1e-12, 200000);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("semi-infinite: exponential and rational tails") {
  auto r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, {1.0, 5.0},
                                   20.0, 1e-10, 1e-14, 100000);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));

  r = integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, {1.0}, 10.0,
                              1e-10, 1e-14, 100000);
  CHECK(r.value == doctest::Approx(pi / 2.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite: the two-pole kernel has a closed form") {
  // int_0^inf dw / ((w^2 + a^2)(w^2 + b^2)) = pi / (2 a b (a + b))
  const double a = 0.1, b = 2.5;
  auto f = [=](double w) { return 1.0 / ((w * w + a * a) * (w * w + b * b)); };
  auto r = integrate_semi_infinite(f, 0.0, {a, b}, 25.0, 1e-10, 1e-16, 200000);
  CHECK(r.value == doctest::Approx(pi / (2.0 * a * b * (a + b))).epsilon(1e-10));
}

TEST_CASE("an identically zero integrand converges immediately") {
  auto r = integrate_adaptive([](double) { return 0.0; }, 0.0, 100.0, 1e-12, 0.0, 100);
  CHECK(r.converged);
  CHECK(r.value == 0.0);
  CHECK(r.evals == 15);
}

TEST_CASE("budget exhaustion is reported, not truncated") {
  // the endpoint singularity needs far more than 90 evaluations at 1e-9
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, 1e-9, 1e-12, 90), ConvergenceError);
}

TEST_CASE("edges must be increasing and non-degenerate") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate_adaptive(f, std::vector<double>{1.0, 0.0}, 1e-6, 1e-12, 1000),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_adaptive(f, std::vector<double>{1.0}, 1e-6, 1e-12, 1000),
                  std::invalid_argument);
}

TEST_CASE("interior breakpoints outside (a, tail_start) are ignored") {
  auto f = [](double x) { return std::exp(-x); };
  auto r = integrate_semi_infinite(f, 0.0, {-3.0, 0.0, 50.0}, 20.0, 1e-10, 1e-14, 100000);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("log_spaced endpoints are exact") {
  auto g = log_spaced(1e-3, 1e2, 50);
  CHECK(g.size() == 50);
  CHECK(g.front() == 1e-3);
  CHECK(g.back() == 1e2);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_spaced(1.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_spaced(1.0, 2.0, 1), std::invalid_argument);
}

TEST_CASE("spec hash distinguishes settings") {
  QuadratureSpec a, b;
  CHECK(quadrature_spec_hash(a) == quadrature_spec_hash(b));
  b.rel_tol = 1e-7;
  CHECK(quadrature_spec_hash(a) != quadrature_spec_hash(b));
}
