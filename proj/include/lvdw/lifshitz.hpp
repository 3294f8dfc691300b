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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "lvdw/dielectric.hpp"
#include "lvdw/quadrature.hpp"

namespace lvdw {

enum class Polarization { S, P };

/// Two slabs (1, 2) across a fluid-filled gap (3) of width separation_nm.
struct LayerStack {
  DielectricModel eps1;
  DielectricModel eps2;
  DielectricModel eps3;
  double separation_nm = 0.0;

  LayerStack(DielectricModel e1, DielectricModel e2, DielectricModel e3, double d);
};

enum class CurveKind { PressurePa, DeltaPercent };

/// Ordered (separation, value) records plus provenance metadata.
struct ForceCurve {
  struct Point {
    double separation_nm;
    double value;
  };
  CurveKind kind = CurveKind::PressurePa;
  std::vector<Point> points;  ///< separations strictly increasing
  std::string stack_description;
  std::string quad_hash;
};

/// Transverse decay constant k = sqrt(eps*(zeta/hbar_c)^2 + Q^2), nm^-1.
double kz(double eps3_val, double zeta, double Q);

/// Imaginary-axis Fresnel reflection coefficient between media i and j:
/// r_s = (k_i - k_j)/(k_i + k_j), r_p = (eps_j*k_i - eps_i*k_j)/(eps_j*k_i + eps_i*k_j).
/// Always real with |r| < 1 for positive permittivities.
double fresnel(Polarization pol, double eps_i, double eps_j, double zeta, double Q);

/// Reflection kernel w/(1 - w) with w = r13*r23*exp(-y), y = 2*k3*d.
/// The decaying exponential stays in the numerator; exp(+y) is never formed.
double reflection_kernel(double r13_r23, double y);

/// Single-polarization integrand Q*k3*kernel of the force integral, nm^-2.
double integrand(const LayerStack& stack, Polarization pol, double zeta, double Q,
                 const QuadratureSpec& quad);

/// Force per unit area between the slabs, in Pa; positive means attraction.
/// Evaluates the double integral over imaginary wavenumber kappa = zeta/hbar_c
/// (log-mapped) and y = 2*k3*d (exponentially weighted), summed over both
/// polarizations, then converts from eV/nm^3 to Pa.
double force_per_area(const LayerStack& stack, const QuadratureSpec& quad);

/// One pressure record per separation (strictly increasing, all > 0).
/// A failure at any separation is reported with that separation identified.
ForceCurve force_curve(const DielectricModel& eps1, const DielectricModel& eps2,
                       const DielectricModel& eps3, std::span<const double> separations_nm,
                       const QuadratureSpec& quad);

/// |(f_dry - f_wet)/f_dry| * 100. f_dry must be nonzero.
double percent_difference(double f_dry, double f_wet);

/// Percent difference between the force with dry-measured and liquid-measured
/// slab parameters, both slabs of the same metal across the same liquid gap.
ForceCurve delta_curve(const DielectricModel& liquid, const DrudeParams& dry_params,
                       const DrudeParams& wet_params, std::span<const double> separations_nm,
                       const QuadratureSpec& quad);

/// Perfect-conductor benchmark pi^2*hbar_c/(240 d^4), in Pa.
double ideal_mirror_force(double separation_nm);

}  // namespace lvdw
