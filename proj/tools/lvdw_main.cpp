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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lvdw/csv.hpp"
#include "lvdw/dielectric.hpp"
#include "lvdw/lifshitz.hpp"
#include "lvdw/material_db.hpp"

namespace {

using namespace lvdw;

struct CommonOpts {
  std::string out = "-";
  std::string materials_dir = "data/materials";
  QuadratureSpec quad;
  bool paper_literal_colecole = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_materials = true) {
  cmd->add_option("--out", opts.out, "output path ('-' for stdout)");
  if (with_materials)
    cmd->add_option("--materials", opts.materials_dir, "material database directory");
  cmd->add_option("--rel-tol", opts.quad.rel_tol, "quadrature relative tolerance");
  cmd->add_option("--max-evals", opts.quad.max_evals, "quadrature evaluation budget per integral");
  cmd->add_flag("--paper-literal-colecole", opts.paper_literal_colecole,
                "evaluate Cole-Cole models with the static and high-frequency roles "
                "exchanged, as in the original single-oscillator form");
}

ColeColeForm form_of(const CommonOpts& o) {
  return o.paper_literal_colecole ? ColeColeForm::PaperLiteral : ColeColeForm::Physical;
}

bool is_builtin_ref(const std::string& ref) {
  return ref == "vacuum" || ref.rfind("constant:", 0) == 0 || ref.rfind("au:", 0) == 0;
}

// Model references: vacuum | constant:X | au:N (built-in gold rows) | database name.
DielectricModel resolve_model(const std::string& ref, const std::optional<MaterialDatabase>& db) {
  if (ref == "vacuum") return DielectricModel::vacuum();
  if (ref.rfind("constant:", 0) == 0) return DielectricModel::constant(std::stod(ref.substr(9)));
  if (ref.rfind("au:", 0) == 0) return DielectricModel::drude(builtin_table1(std::stod(ref.substr(3))));
  if (!db) throw std::runtime_error("model reference '" + ref + "' needs a material database");
  return db->find(ref).model;
}

void emit(const CommonOpts& opts, const std::string& content) {
  if (opts.out == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  write_file_atomic(opts.out, content);
}

std::vector<double> make_grid(double lo, double hi, int points, const std::string& list) {
  if (!list.empty()) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < list.size()) {
      std::size_t comma = list.find(',', pos);
      if (comma == std::string::npos) comma = list.size();
      out.push_back(std::stod(list.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return out;
  }
  if (points == 1) return {lo};
  return log_spaced(lo, hi, points);
}

// Wide CSV for the three-liquid separation sweep.
std::string fig2_csv(const std::vector<double>& separations,
                     const std::vector<std::string>& names,
                     const std::vector<ForceCurve>& curves) {
  std::string out = "separation_nm";
  for (const auto& n : names) out += ",delta_percent_" + n;
  out += '\n';
  for (std::size_t i = 0; i < separations.size(); ++i) {
    out += format_number(separations[i]);
    for (const auto& c : curves) {
      out += ',';
      out += format_number(c.points[i].value);
    }
    out += '\n';
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Lifshitz-van der Waals pressure between slabs across a fluid gap"};
  app.require_subcommand(1);

  // eps: evaluate one model over a log frequency grid
  CommonOpts eps_opts;
  std::string eps_model;
  double eps_zmin = 1e-3, eps_zmax = 1e2;
  int eps_points = 60;
  auto* eps_cmd = app.add_subcommand("eps", "dielectric function on the imaginary axis");
  eps_cmd->add_option("--model", eps_model, "model reference")->required();
  eps_cmd->add_option("--zeta-min", eps_zmin, "grid start, eV");
  eps_cmd->add_option("--zeta-max", eps_zmax, "grid end, eV");
  eps_cmd->add_option("--zeta-points", eps_points, "grid size");
  add_common(eps_cmd, eps_opts);

  // force: pressure curve for an arbitrary stack
  CommonOpts force_opts;
  std::string f_eps1, f_eps2, f_eps3, f_dlist;
  double f_dmin = 10.0, f_dmax = 1000.0;
  int f_dpoints = 40;
  auto* force_cmd = app.add_subcommand("force", "force per unit area over a separation grid");
  force_cmd->add_option("--eps1", f_eps1, "slab 1 model reference")->required();
  force_cmd->add_option("--eps2", f_eps2, "slab 2 model reference")->required();
  force_cmd->add_option("--eps3", f_eps3, "gap model reference")->required();
  force_cmd->add_option("--d-min", f_dmin, "smallest separation, nm");
  force_cmd->add_option("--d-max", f_dmax, "largest separation, nm");
  force_cmd->add_option("--d-points", f_dpoints, "log grid size");
  force_cmd->add_option("--d", f_dlist, "explicit comma-separated separations, nm");
  add_common(force_cmd, force_opts);

  // delta: dry-vs-immersed percent difference for one liquid
  CommonOpts delta_opts;
  std::string d_liquid, d_dlist;
  double d_dry_n = 1.0, d_wet_n = 0.0, d_dmin = 10.0, d_dmax = 1000.0;
  int d_dpoints = 40;
  auto* delta_cmd = app.add_subcommand(
      "delta", "percent force difference between dry and liquid-measured slab parameters");
  delta_cmd->add_option("--liquid", d_liquid, "gap liquid model reference")->required();
  delta_cmd->add_option("--dry-n", d_dry_n, "ambient index of the dry parameter row");
  delta_cmd->add_option("--wet-n", d_wet_n, "ambient index of the immersed parameter row")
      ->required();
  delta_cmd->add_option("--d-min", d_dmin, "smallest separation, nm");
  delta_cmd->add_option("--d-max", d_dmax, "largest separation, nm");
  delta_cmd->add_option("--d-points", d_dpoints, "log grid size");
  delta_cmd->add_option("--d", d_dlist, "explicit comma-separated separations, nm");
  add_common(delta_cmd, delta_opts);

  // mix: one Bruggeman effective-medium value
  CommonOpts mix_opts;
  double mix_em = 0.0, mix_ef = 0.0, mix_f = 0.0;
  auto* mix_cmd = app.add_subcommand("mix", "Bruggeman effective permittivity");
  mix_cmd->add_option("eps_metal", mix_em, "metal permittivity")->required();
  mix_cmd->add_option("eps_fluid", mix_ef, "fluid permittivity")->required();
  mix_cmd->add_option("f_metal", mix_f, "metal volume fraction")->required();
  add_common(mix_cmd, mix_opts, /*with_materials=*/false);

  // fig1: immersed/dry dielectric ratio dataset
  CommonOpts fig1_opts;
  auto* fig1_cmd = app.add_subcommand(
      "fig1", "ratio of immersed to dry gold dielectric functions over frequency");
  add_common(fig1_cmd, fig1_opts, /*with_materials=*/false);

  // fig2: three-liquid percent-difference dataset
  CommonOpts fig2_opts;
  auto* fig2_cmd = app.add_subcommand(
      "fig2", "percent force difference vs separation for water, CCl3F and CBr3F");
  add_common(fig2_cmd, fig2_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (*eps_cmd) {
      std::optional<MaterialDatabase> db;
      if (!is_builtin_ref(eps_model))
        db = MaterialDatabase::load_directory(eps_opts.materials_dir, form_of(eps_opts));
      DielectricModel model = resolve_model(eps_model, db);
      std::string csv = "zeta_eV,eps\n";
      for (double z : log_spaced(eps_zmin, eps_zmax, eps_points)) {
        csv += format_number(z);
        csv += ',';
        csv += format_number(eval_model(model, z, eps_opts.quad));
        csv += '\n';
      }
      emit(eps_opts, csv);
    } else if (*force_cmd) {
      std::optional<MaterialDatabase> db;
      for (const std::string& r : {f_eps1, f_eps2, f_eps3})
        if (!is_builtin_ref(r)) {
          db = MaterialDatabase::load_directory(force_opts.materials_dir, form_of(force_opts));
          break;
        }
      DielectricModel e1 = resolve_model(f_eps1, db);
      DielectricModel e2 = resolve_model(f_eps2, db);
      DielectricModel e3 = resolve_model(f_eps3, db);
      const auto grid = make_grid(f_dmin, f_dmax, f_dpoints, f_dlist);
      emit(force_opts, curve_to_csv(force_curve(e1, e2, e3, grid, force_opts.quad)));
    } else if (*delta_cmd) {
      std::optional<MaterialDatabase> db;
      if (!is_builtin_ref(d_liquid))
        db = MaterialDatabase::load_directory(delta_opts.materials_dir, form_of(delta_opts));
      DielectricModel liquid = resolve_model(d_liquid, db);
      const auto grid = make_grid(d_dmin, d_dmax, d_dpoints, d_dlist);
      emit(delta_opts, curve_to_csv(delta_curve(liquid, builtin_table1(d_dry_n),
                                                builtin_table1(d_wet_n), grid, delta_opts.quad)));
    } else if (*mix_cmd) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.15g\n", bruggeman_mix(mix_em, mix_ef, mix_f));
      emit(mix_opts, buf);
    } else if (*fig1_cmd) {
      const DrudeParams dry = builtin_table1(1.0);
      const double omega_pD = std::sqrt(dry.omega_p_sq);
      std::vector<EpsRatioRow> rows;
      const auto grid = log_spaced(1e-3, 1e2, 60);
      std::vector<double> dry_eps(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i)
        dry_eps[i] = drude_eps_izeta(dry, grid[i], fig1_opts.quad);
      for (double n : {1.33, 1.42, 1.51, 1.60}) {
        const DrudeParams wet = builtin_table1(n);
        for (std::size_t i = 0; i < grid.size(); ++i)
          rows.push_back({grid[i] / omega_pD,
                          drude_eps_izeta(wet, grid[i], fig1_opts.quad) / dry_eps[i], n});
      }
      emit(fig1_opts, eps_ratio_to_csv(rows));
    } else if (*fig2_cmd) {
      MaterialDatabase db =
          MaterialDatabase::load_directory(fig2_opts.materials_dir, form_of(fig2_opts));
      const auto grid = log_spaced(10.0, 1000.0, 40);
      const DrudeParams dry = builtin_table1(1.0);
      const std::vector<std::string> names{"water", "ccl3f", "cbr3f"};
      std::vector<ForceCurve> curves;
      for (const auto& name : names) {
        const MaterialRecord& rec = db.find(name);
        if (!rec.ambient_index)
          throw std::runtime_error("material '" + name + "' lacks ambient_index");
        curves.push_back(delta_curve(rec.model, dry, builtin_table1(*rec.ambient_index), grid,
                                     fig2_opts.quad));
      }
      emit(fig2_opts, fig2_csv(grid, names, curves));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
