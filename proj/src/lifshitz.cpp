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

#include "lvdw/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lvdw/constants.hpp"

namespace lvdw {

namespace {

constexpr double pi = 3.14159265358979323846;
// Riemann zeta(3), for the small-kappa contribution bound.
constexpr double zeta3 = 1.2020569031595943;

// Pa per unit of the outer integral, which carries nm^-4.
constexpr double pressure_prefactor =
    constants::hbar_c_eV_nm / (2.0 * pi * pi) * constants::pascal_per_eV_nm3;

}  // namespace

LayerStack::LayerStack(DielectricModel e1, DielectricModel e2, DielectricModel e3, double d)
    : eps1(std::move(e1)), eps2(std::move(e2)), eps3(std::move(e3)), separation_nm(d) {
  if (!(d > 0.0)) throw std::invalid_argument("LayerStack: separation must be > 0 nm");
}

double kz(double eps3_val, double zeta, double Q) {
  const double q = zeta / constants::hbar_c_eV_nm;
  return std::sqrt(eps3_val * q * q + Q * Q);
}

double fresnel(Polarization pol, double eps_i, double eps_j, double zeta, double Q) {
  const double ki = kz(eps_i, zeta, Q);
  const double kj = kz(eps_j, zeta, Q);
  if (pol == Polarization::S) return (ki - kj) / (ki + kj);
  return (eps_j * ki - eps_i * kj) / (eps_j * ki + eps_i * kj);
}

double reflection_kernel(double r13_r23, double y) {
  const double w = r13_r23 * std::exp(-y);
  return w / (1.0 - w);
}

double integrand(const LayerStack& stack, Polarization pol, double zeta, double Q,
                 const QuadratureSpec& quad) {
  const double e1 = eval_model(stack.eps1, zeta, quad);
  const double e2 = eval_model(stack.eps2, zeta, quad);
  const double e3 = eval_model(stack.eps3, zeta, quad);
  const double k3 = kz(e3, zeta, Q);
  const double r13 = fresnel(pol, e1, e3, zeta, Q);
  const double r23 = fresnel(pol, e2, e3, zeta, Q);
  return Q * k3 * reflection_kernel(r13 * r23, 2.0 * k3 * stack.separation_nm);
}

namespace {

// Fresnel coefficients with both transverse wavenumbers already in hand.
inline double rs(double ki, double kj) { return (ki - kj) / (ki + kj); }
inline double rp(double ei, double ej, double ki, double kj) {
  return (ej * ki - ei * kj) / (ej * ki + ei * kj);
}

// Inner integral over s = y - y0 at fixed imaginary wavenumber kappa:
//   (1/(8 d^3)) * int_0^span (y0+s)^2 sum_pol kernel ds,
// where Q^2 = s (s + 2 y0) / (2d)^2 on the shifted domain.
double inner_integral(double kappa, double d, double e1, double e2, double e3,
                      const QuadratureSpec& quad) {
  const double y0 = 2.0 * d * std::sqrt(e3) * kappa;
  const double kap2 = kappa * kappa;
  const double inv2d = 1.0 / (2.0 * d);

  auto f = [&](double s) {
    const double y = y0 + s;
    const double q2 = s * (s + 2.0 * y0) * inv2d * inv2d;
    // k3 recomputed the same way as k1, k2 so an index-matched slab gives a
    // bitwise-zero reflection instead of roundoff noise.
    const double k1 = std::sqrt(e1 * kap2 + q2);
    const double k2 = std::sqrt(e2 * kap2 + q2);
    const double k3 = std::sqrt(e3 * kap2 + q2);
    const double ey = std::exp(-y);
    const double ws = rs(k1, k3) * rs(k2, k3) * ey;
    const double wp = rp(e1, e3, k1, k3) * rp(e2, e3, k2, k3) * ey;
    return y * y * (ws / (1.0 - ws) + wp / (1.0 - wp));
  };

  // Presplit around the exponential decay scale to keep adaptive depth low.
  std::vector<double> edges{0.0, 1.0, 4.0, 12.0, 30.0, quad.y_span};
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [&](double e) { return e > quad.y_span; }),
              edges.end());
  if (edges.back() != quad.y_span) edges.push_back(quad.y_span);

  QuadResult r = integrate_adaptive(f, edges, 0.1 * quad.rel_tol, 1e-280,
                                    quad.max_evals, "lifshitz inner integral");
  return r.value / (8.0 * d * d * d);
}

}  // namespace

double force_per_area(const LayerStack& stack, const QuadratureSpec& quad) {
  const double d = stack.separation_nm;
  const bool same_slabs = stack.eps1 == stack.eps2;

  const double kappa_max =
      std::min(quad.zeta_max / constants::hbar_c_eV_nm, quad.kappa_window / (2.0 * d));
  // Everything below kappa_min contributes less than 1% of the pressure
  // floor: the inner integral is bounded by 2 * 2*zeta(3) / (8 d^3).
  const double inner_bound = 4.0 * zeta3 / (8.0 * d * d * d);
  double kappa_min = 0.01 * quad.abs_tol / (pressure_prefactor * inner_bound);
  kappa_min = std::min(kappa_min, 1e-9 * kappa_max);

  auto outer = [&](double t) {
    const double kappa = std::exp(t);
    const double zeta = constants::hbar_c_eV_nm * kappa;
    const double e1 = eval_model(stack.eps1, zeta, quad);
    const double e2 = same_slabs ? e1 : eval_model(stack.eps2, zeta, quad);
    const double e3 = eval_model(stack.eps3, zeta, quad);
    return kappa * inner_integral(kappa, d, e1, e2, e3, quad);
  };

  // Log-spaced presplit keeps the initial rule from missing the support,
  // which sits near kappa ~ 1/(2 d sqrt(eps3)).
  const double t_lo = std::log(kappa_min), t_hi = std::log(kappa_max);
  const int n_pieces = std::max(2, static_cast<int>(std::ceil((t_hi - t_lo) / 5.0)));
  std::vector<double> edges(n_pieces + 1);
  for (int i = 0; i <= n_pieces; ++i)
    edges[i] = t_lo + (t_hi - t_lo) * i / n_pieces;

  const double abs_floor = quad.abs_tol / pressure_prefactor;
  QuadResult r = integrate_adaptive(outer, edges, quad.rel_tol, abs_floor,
                                    quad.max_evals, "lifshitz outer integral");

  // Analytic bound on the truncated kappa > kappa_max tail, using |r r| <= 1,
  // eps3 >= 1 and 1/(1 - e^-y) <= 1/(1 - e^-1) for y >= 1.
  const double Y = 2.0 * d * kappa_max;
  const double tail_bound = (2.0 / (8.0 * d * d * d)) * (1.0 / (2.0 * d)) *
                            (1.0 / (1.0 - std::exp(-1.0))) *
                            (Y * Y + 4.0 * Y + 6.0) * std::exp(-Y);
  const double force = pressure_prefactor * r.value;
  if (pressure_prefactor * tail_bound >
      std::max(quad.rel_tol * std::fabs(force), quad.abs_tol))
    throw ConvergenceError("force_per_area: zeta_max cutoff truncates the outer "
                           "integral beyond tolerance; raise quad.zeta_max");
  return force;
}

ForceCurve force_curve(const DielectricModel& eps1, const DielectricModel& eps2,
                       const DielectricModel& eps3, std::span<const double> separations_nm,
                       const QuadratureSpec& quad) {
  for (std::size_t i = 0; i < separations_nm.size(); ++i) {
    if (!(separations_nm[i] > 0.0))
      throw std::invalid_argument("force_curve: separations must be > 0 nm");
    if (i > 0 && !(separations_nm[i] > separations_nm[i - 1]))
      throw std::invalid_argument("force_curve: separations must be strictly increasing");
  }
  ForceCurve curve;
  curve.kind = CurveKind::PressurePa;
  curve.stack_description = eps1.description() + " | " + eps3.description() + " | " +
                            eps2.description();
  curve.quad_hash = quadrature_spec_hash(quad);
  curve.points.reserve(separations_nm.size());
  for (double d : separations_nm) {
    try {
      LayerStack stack(eps1, eps2, eps3, d);
      curve.points.push_back({d, force_per_area(stack, quad)});
    } catch (const std::exception& e) {
      throw std::runtime_error("force_curve: failure at separation " +
                               std::to_string(d) + " nm: " + e.what());
    }
  }
  return curve;
}

double percent_difference(double f_dry, double f_wet) {
  if (f_dry == 0.0)
    throw std::domain_error("percent_difference: reference force is zero");
  return std::fabs((f_dry - f_wet) / f_dry) * 100.0;
}

ForceCurve delta_curve(const DielectricModel& liquid, const DrudeParams& dry_params,
                       const DrudeParams& wet_params, std::span<const double> separations_nm,
                       const QuadratureSpec& quad) {
  const DielectricModel dry = DielectricModel::drude(dry_params);
  const DielectricModel wet = DielectricModel::drude(wet_params);
  ForceCurve f_dry = force_curve(dry, dry, liquid, separations_nm, quad);
  ForceCurve f_wet = force_curve(wet, wet, liquid, separations_nm, quad);

  ForceCurve curve;
  curve.kind = CurveKind::DeltaPercent;
  curve.stack_description = "delta: dry=" + dry.description() + ", wet=" + wet.description() +
                            ", gap=" + liquid.description();
  curve.quad_hash = quadrature_spec_hash(quad);
  curve.points.reserve(separations_nm.size());
  for (std::size_t i = 0; i < f_dry.points.size(); ++i)
    curve.points.push_back({f_dry.points[i].separation_nm,
                            percent_difference(f_dry.points[i].value, f_wet.points[i].value)});
  return curve;
}

double ideal_mirror_force(double separation_nm) {
  if (!(separation_nm > 0.0))
    throw std::domain_error("ideal_mirror_force: separation must be > 0 nm");
  const double d4 = std::pow(separation_nm, 4);
  return pi * pi * constants::hbar_c_eV_nm / (240.0 * d4) * constants::pascal_per_eV_nm3;
}

}  // namespace lvdw
