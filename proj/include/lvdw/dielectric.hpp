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

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lvdw/quadrature.hpp"

namespace lvdw {

/// Thrown when a parameter set or model violates one of its invariants.
/// `field` names the offending parameter.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Free-electron metal with frequency-dependent damping
/// gamma(omega) = gamma0 + beta*omega^2. Energies in eV.
struct DrudeParams {
  double eps_inf = 1.0;     ///< core-polarization background, dimensionless
  double omega_p_sq = 0.0;  ///< squared plasma frequency, eV^2
  double gamma0 = 0.0;      ///< zero-frequency damping, eV
  double beta = 0.0;        ///< damping curvature, eV^-1
  double ambient_index = 1.0;  ///< refractive index of the measurement medium (metadata)

  void validate() const;
};

struct NinhamTerm {
  double C = 0.0;      ///< oscillator strength, dimensionless
  double omega = 0.0;  ///< resonance frequency, eV
  double g = 0.0;      ///< damping, eV
};

/// Microwave relaxation plus a sum of damped oscillators:
/// eps(i*zeta) = 1 + B/(1 + zeta*tau) + sum_i C_i/(1 + (zeta/omega_i)^2 + g_i*zeta/omega_i^2)
struct NinhamParams {
  double B = 0.0;    ///< microwave strength, dimensionless
  double tau = 1.0;  ///< relaxation time, eV^-1
  std::vector<NinhamTerm> terms;

  void validate() const;
};

/// Single-relaxation permittivity with a stretched exponent (1 - alpha).
struct ColeColeParams {
  double eps_static = 1.0;  ///< zero-frequency permittivity
  double eps_high = 1.0;    ///< high-frequency permittivity
  double tau = 1.0;         ///< relaxation time, eV^-1
  double alpha = 0.0;       ///< distribution parameter in [0, 1)

  void validate() const;
};

/// Which way the Cole-Cole limits are assigned. Physical puts the static
/// value at zeta = 0; PaperLiteral swaps the two roles.
enum class ColeColeForm { Physical, PaperLiteral };

class DielectricModel;

namespace detail {

struct Vacuum {};
struct Constant {
  double value;
};
struct Drude {
  DrudeParams params;
};
struct Ninham {
  NinhamParams params;
};
struct ColeCole {
  ColeColeParams params;
  ColeColeForm form;
};
struct Bruggeman {
  std::shared_ptr<const DielectricModel> metal;
  std::shared_ptr<const DielectricModel> fluid;
  double f_metal;
};
struct Tabulated {
  std::vector<double> zeta;  ///< strictly increasing, eV
  std::vector<double> eps;   ///< all >= 1
};

using ModelVariant = std::variant<Vacuum, Constant, Drude, Ninham, ColeCole, Bruggeman, Tabulated>;

}  // namespace detail

/// A causal permittivity model evaluable on the imaginary frequency axis.
/// Immutable after construction; every factory validates its inputs, so a
/// constructed model always satisfies eps(i*zeta) >= 1 for zeta > 0.
class DielectricModel {
 public:
  static DielectricModel vacuum();
  static DielectricModel constant(double value);
  static DielectricModel drude(DrudeParams p);
  static DielectricModel ninham(NinhamParams p);
  static DielectricModel cole_cole(ColeColeParams p, ColeColeForm form = ColeColeForm::Physical);
  static DielectricModel bruggeman(DielectricModel metal, DielectricModel fluid, double f_metal);
  static DielectricModel tabulated(std::vector<double> zeta, std::vector<double> eps);

  /// eps(i*zeta); see eval_model.
  double at_izeta(double zeta, const QuadratureSpec& quad) const;

  const detail::ModelVariant& variant() const { return v_; }

  /// Short human-readable description, used in curve metadata.
  std::string description() const;

  bool operator==(const DielectricModel& other) const;

 private:
  explicit DielectricModel(detail::ModelVariant v) : v_(std::move(v)) {}
  detail::ModelVariant v_;
};

// --- operations on the imaginary axis ----------------------------------

/// gamma(omega) = gamma0 + beta*omega^2, eV.
double drude_damping(const DrudeParams& p, double omega);

/// Imaginary part of the Drude permittivity on the real axis:
/// eps''(omega) = omega_p^2 * gamma(omega) / (omega * (omega^2 + gamma^2)).
/// omega must be positive; the 1/omega divergence at zero is integrable and
/// handled by the open quadrature in kk_rotate.
double drude_eps_imag(const DrudeParams& p, double omega);

/// Rotation to the imaginary axis:
/// eps(i*zeta) = eps_inf + (2/pi) * integral_0^inf omega*eps''(omega)/(omega^2+zeta^2) domega.
/// The offset is eps_inf, not 1: with a Drude eps'' this reproduces the
/// closed-form rotation including core polarization. `breakpoints` may mark
/// scales of eps'' (peak widths) to presplit the domain at.
double kk_rotate(const std::function<double(double)>& eps_imag, double eps_inf,
                 double zeta, const QuadratureSpec& quad,
                 std::vector<double> breakpoints = {});

/// Drude permittivity on the imaginary axis via kk_rotate. zeta must be
/// positive: the rotated Drude term diverges at zeta = 0.
double drude_eps_izeta(const DrudeParams& p, double zeta, const QuadratureSpec& quad);

/// Closed-form oscillator-sum representation; exact, no quadrature.
double ninham_eps_izeta(const NinhamParams& p, double zeta);

/// Cole-Cole permittivity; exact, no quadrature.
double cole_cole_eps_izeta(const ColeColeParams& p, double zeta,
                           ColeColeForm form = ColeColeForm::Physical);

/// Symmetric two-phase effective medium: the unique positive root of
///   2e^2 + e*[eps_m*(1 - 3f) + eps_f*(3f - 2)] - eps_m*eps_f = 0.
/// Both permittivities must be positive (they are real and positive on the
/// imaginary axis); f_metal in [0, 1].
double bruggeman_mix(double eps_metal, double eps_fluid, double f_metal);

/// Dispatch over model variants. zeta must be > 0 for Drude (KK path) and
/// within the sample range for Tabulated models (no extrapolation).
double eval_model(const DielectricModel& m, double zeta, const QuadratureSpec& quad);

}  // namespace lvdw
