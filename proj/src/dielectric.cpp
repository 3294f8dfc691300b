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

#include "lvdw/dielectric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lvdw {

namespace {

constexpr double pi = 3.14159265358979323846;

void require(bool ok, const char* field, const std::string& msg) {
  if (!ok) throw ValidationError(field, msg);
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

}  // namespace

void DrudeParams::validate() const {
  require(eps_inf >= 1.0, "eps_inf", "eps_inf must be >= 1, got " + num(eps_inf));
  require(omega_p_sq > 0.0, "omega_p_sq", "omega_p_sq must be > 0, got " + num(omega_p_sq));
  require(gamma0 > 0.0, "gamma0", "gamma0 must be > 0, got " + num(gamma0));
  require(beta >= 0.0, "beta", "beta must be >= 0, got " + num(beta));
  require(ambient_index >= 1.0, "ambient_index",
          "ambient_index must be >= 1, got " + num(ambient_index));
}

void NinhamParams::validate() const {
  require(B >= 0.0, "B", "B must be >= 0, got " + num(B));
  require(tau > 0.0, "tau", "tau must be > 0, got " + num(tau));
  for (const auto& t : terms) {
    require(t.C >= 0.0, "C", "oscillator strength C must be >= 0, got " + num(t.C));
    require(t.omega > 0.0, "omega", "resonance frequency omega must be > 0, got " + num(t.omega));
    require(t.g >= 0.0, "g", "damping g must be >= 0, got " + num(t.g));
  }
}

void ColeColeParams::validate() const {
  require(eps_high >= 1.0, "eps_high", "eps_high must be >= 1, got " + num(eps_high));
  require(eps_static >= eps_high, "eps_static",
          "eps_static must be >= eps_high, got " + num(eps_static));
  require(tau > 0.0, "tau", "tau must be > 0, got " + num(tau));
  require(alpha >= 0.0 && alpha < 1.0, "alpha", "alpha must be in [0, 1), got " + num(alpha));
}

// --- factories ----------------------------------------------------------

DielectricModel DielectricModel::vacuum() { return DielectricModel{detail::Vacuum{}}; }

DielectricModel DielectricModel::constant(double value) {
  if (!(value >= 1.0)) throw ValidationError("value", "constant permittivity must be >= 1");
  return DielectricModel{detail::Constant{value}};
}

DielectricModel DielectricModel::drude(DrudeParams p) {
  p.validate();
  return DielectricModel{detail::Drude{p}};
}

DielectricModel DielectricModel::ninham(NinhamParams p) {
  p.validate();
  return DielectricModel{detail::Ninham{std::move(p)}};
}

DielectricModel DielectricModel::cole_cole(ColeColeParams p, ColeColeForm form) {
  p.validate();
  return DielectricModel{detail::ColeCole{p, form}};
}

DielectricModel DielectricModel::bruggeman(DielectricModel metal, DielectricModel fluid,
                                           double f_metal) {
  if (!(f_metal >= 0.0 && f_metal <= 1.0))
    throw ValidationError("f_metal", "volume fraction must be in [0, 1]");
  return DielectricModel{detail::Bruggeman{
      std::make_shared<const DielectricModel>(std::move(metal)),
      std::make_shared<const DielectricModel>(std::move(fluid)), f_metal}};
}

DielectricModel DielectricModel::tabulated(std::vector<double> zeta, std::vector<double> eps) {
  if (zeta.size() != eps.size() || zeta.size() < 2)
    throw ValidationError("samples", "tabulated model needs >= 2 (zeta, eps) samples");
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    if (i > 0 && !(zeta[i] > zeta[i - 1]))
      throw ValidationError("zeta", "tabulated zeta samples must be strictly increasing");
    if (!(eps[i] >= 1.0))
      throw ValidationError("eps", "tabulated eps samples must be >= 1");
  }
  return DielectricModel{detail::Tabulated{std::move(zeta), std::move(eps)}};
}

// --- scalar operations ---------------------------------------------------

double drude_damping(const DrudeParams& p, double omega) {
  return p.gamma0 + p.beta * omega * omega;
}

double drude_eps_imag(const DrudeParams& p, double omega) {
  if (!(omega > 0.0)) throw std::domain_error("drude_eps_imag: omega must be > 0");
  const double g = drude_damping(p, omega);
  return p.omega_p_sq * g / (omega * (omega * omega + g * g));
}

double kk_rotate(const std::function<double(double)>& eps_imag, double eps_inf,
                 double zeta, const QuadratureSpec& quad,
                 std::vector<double> breakpoints) {
  if (!(zeta > 0.0)) throw std::domain_error("kk_rotate: zeta must be > 0");
  const double z2 = zeta * zeta;
  auto integrand = [&](double omega) {
    return omega * eps_imag(omega) / (omega * omega + z2);
  };
  // Presplit at the Lorentzian knee omega = zeta plus any scales of eps''
  // supplied by the caller; everything past the largest scale goes through
  // the u = 1/omega tail map.
  breakpoints.push_back(zeta);
  double largest = zeta;
  for (double b : breakpoints) largest = std::max(largest, b);
  const double tail_start = 10.0 * std::max(largest, 1.0);

  QuadResult r = integrate_semi_infinite(integrand, 0.0, std::move(breakpoints),
                                         tail_start, quad.rel_tol,
                                         0.1 * quad.rel_tol, quad.max_evals,
                                         "kk_rotate");
  return eps_inf + (2.0 / pi) * r.value;
}

double drude_eps_izeta(const DrudeParams& p, double zeta, const QuadratureSpec& quad) {
  if (!(zeta > 0.0)) throw std::domain_error("drude_eps_izeta: zeta must be > 0");
  // The integrand peaks on the gamma scale and has a knee at omega = zeta.
  std::vector<double> breaks{p.gamma0, drude_damping(p, zeta)};
  return kk_rotate([&p](double w) { return drude_eps_imag(p, w); }, p.eps_inf,
                   zeta, quad, std::move(breaks));
}

double ninham_eps_izeta(const NinhamParams& p, double zeta) {
  if (!(zeta >= 0.0)) throw std::domain_error("ninham_eps_izeta: zeta must be >= 0");
  double eps = 1.0 + p.B / (1.0 + zeta * p.tau);
  for (const auto& t : p.terms) {
    const double x = zeta / t.omega;
    eps += t.C / (1.0 + x * x + t.g * zeta / (t.omega * t.omega));
  }
  return eps;
}

double cole_cole_eps_izeta(const ColeColeParams& p, double zeta, ColeColeForm form) {
  if (!(zeta >= 0.0)) throw std::domain_error("cole_cole_eps_izeta: zeta must be >= 0");
  const double spread = std::pow(zeta * p.tau, 1.0 - p.alpha);
  if (form == ColeColeForm::PaperLiteral)
    return p.eps_static + (p.eps_high - p.eps_static) / (1.0 + spread);
  return p.eps_high + (p.eps_static - p.eps_high) / (1.0 + spread);
}

double bruggeman_mix(double eps_metal, double eps_fluid, double f_metal) {
  if (!(eps_metal > 0.0) || !(eps_fluid > 0.0))
    throw std::domain_error("bruggeman_mix: permittivities must be > 0");
  if (!(f_metal >= 0.0 && f_metal <= 1.0))
    throw std::domain_error("bruggeman_mix: f_metal must be in [0, 1]");
  // 2e^2 - b*e - eps_m*eps_f = 0 with b = eps_m*(3f - 1) + eps_f*(2 - 3f).
  // The product of the roots is negative, so exactly one root is positive.
  const double b = eps_metal * (3.0 * f_metal - 1.0) + eps_fluid * (2.0 - 3.0 * f_metal);
  const double disc = std::sqrt(b * b + 8.0 * eps_metal * eps_fluid);
  return (b + disc) / 4.0;
}

double eval_model(const DielectricModel& m, double zeta, const QuadratureSpec& quad) {
  return m.at_izeta(zeta, quad);
}

double DielectricModel::at_izeta(double zeta, const QuadratureSpec& quad) const {
  struct Visitor {
    double zeta;
    const QuadratureSpec& quad;

    double operator()(const detail::Vacuum&) const { return 1.0; }
    double operator()(const detail::Constant& c) const { return c.value; }
    double operator()(const detail::Drude& d) const {
      return drude_eps_izeta(d.params, zeta, quad);
    }
    double operator()(const detail::Ninham& n) const {
      return ninham_eps_izeta(n.params, zeta);
    }
    double operator()(const detail::ColeCole& c) const {
      return cole_cole_eps_izeta(c.params, zeta, c.form);
    }
    double operator()(const detail::Bruggeman& b) const {
      const double em = b.metal->at_izeta(zeta, quad);
      const double ef = b.fluid->at_izeta(zeta, quad);
      return bruggeman_mix(em, ef, b.f_metal);
    }
    double operator()(const detail::Tabulated& t) const {
      if (zeta < t.zeta.front() || zeta > t.zeta.back())
        throw std::domain_error("tabulated model: zeta=" + std::to_string(zeta) +
                                " outside sample range [" + std::to_string(t.zeta.front()) +
                                ", " + std::to_string(t.zeta.back()) + "], no extrapolation");
      auto hi = std::lower_bound(t.zeta.begin(), t.zeta.end(), zeta);
      if (hi == t.zeta.begin()) return t.eps.front();
      const auto i = static_cast<std::size_t>(hi - t.zeta.begin());
      if (i == t.zeta.size()) return t.eps.back();
      const double z0 = t.zeta[i - 1], z1 = t.zeta[i];
      const double w = (zeta - z0) / (z1 - z0);
      return t.eps[i - 1] * (1.0 - w) + t.eps[i] * w;
    }
  };
  return std::visit(Visitor{zeta, quad}, v_);
}

std::string DielectricModel::description() const {
  struct Visitor {
    std::string operator()(const detail::Vacuum&) const { return "vacuum"; }
    std::string operator()(const detail::Constant& c) const {
      return "constant(" + num(c.value) + ")";
    }
    std::string operator()(const detail::Drude& d) const {
      const auto& p = d.params;
      return "drude(eps_inf=" + num(p.eps_inf) + ", omega_p_sq=" + num(p.omega_p_sq) +
             ", gamma0=" + num(p.gamma0) + ", beta=" + num(p.beta) +
             ", n=" + num(p.ambient_index) + ")";
    }
    std::string operator()(const detail::Ninham& n) const {
      return "ninham(B=" + num(n.params.B) + ", tau=" + num(n.params.tau) + ", " +
             std::to_string(n.params.terms.size()) + " oscillators)";
    }
    std::string operator()(const detail::ColeCole& c) const {
      const auto& p = c.params;
      return std::string("cole_cole(eps_static=") + num(p.eps_static) +
             ", eps_high=" + num(p.eps_high) + ", tau=" + num(p.tau) +
             ", alpha=" + num(p.alpha) +
             (c.form == ColeColeForm::PaperLiteral ? ", literal" : "") + ")";
    }
    std::string operator()(const detail::Bruggeman& b) const {
      return "bruggeman(" + b.metal->description() + ", " + b.fluid->description() +
             ", f_metal=" + num(b.f_metal) + ")";
    }
    std::string operator()(const detail::Tabulated& t) const {
      return "tabulated(" + std::to_string(t.zeta.size()) + " samples, zeta in [" +
             num(t.zeta.front()) + ", " + num(t.zeta.back()) + "])";
    }
  };
  return std::visit(Visitor{}, v_);
}

bool DielectricModel::operator==(const DielectricModel& other) const {
  if (v_.index() != other.v_.index()) return false;
  struct Visitor {
    const detail::ModelVariant& rhs;

    bool operator()(const detail::Vacuum&) const { return true; }
    bool operator()(const detail::Constant& c) const {
      return c.value == std::get<detail::Constant>(rhs).value;
    }
    bool operator()(const detail::Drude& d) const {
      const auto& o = std::get<detail::Drude>(rhs).params;
      const auto& p = d.params;
      return p.eps_inf == o.eps_inf && p.omega_p_sq == o.omega_p_sq &&
             p.gamma0 == o.gamma0 && p.beta == o.beta && p.ambient_index == o.ambient_index;
    }
    bool operator()(const detail::Ninham& n) const {
      const auto& o = std::get<detail::Ninham>(rhs).params;
      const auto& p = n.params;
      if (p.B != o.B || p.tau != o.tau || p.terms.size() != o.terms.size()) return false;
      for (std::size_t i = 0; i < p.terms.size(); ++i)
        if (p.terms[i].C != o.terms[i].C || p.terms[i].omega != o.terms[i].omega ||
            p.terms[i].g != o.terms[i].g)
          return false;
      return true;
    }
    bool operator()(const detail::ColeCole& c) const {
      const auto& o = std::get<detail::ColeCole>(rhs);
      return c.params.eps_static == o.params.eps_static &&
             c.params.eps_high == o.params.eps_high && c.params.tau == o.params.tau &&
             c.params.alpha == o.params.alpha && c.form == o.form;
    }
    bool operator()(const detail::Bruggeman& b) const {
      const auto& o = std::get<detail::Bruggeman>(rhs);
      return b.f_metal == o.f_metal && *b.metal == *o.metal && *b.fluid == *o.fluid;
    }
    bool operator()(const detail::Tabulated& t) const {
      const auto& o = std::get<detail::Tabulated>(rhs);
      return t.zeta == o.zeta && t.eps == o.eps;
    }
  };
  return std::visit(Visitor{other.v_}, v_);
}

}  // namespace lvdw
