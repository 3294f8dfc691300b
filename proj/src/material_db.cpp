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

#include "lvdw/material_db.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lvdw {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Scientific notation with 15 significant digits: lossless enough that a
// parse/serialize round-trip is textually idempotent.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.14e", v);
  return buf;
}

double parse_number(const std::string& text, int line) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError(line, "expected a number, got nothing");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size())
    throw ParseError(line, "malformed number '" + t + "'");
  if (!std::isfinite(v)) throw ParseError(line, "non-finite number '" + t + "'");
  return v;
}

std::vector<double> parse_number_list(const std::string& text, std::size_t expect, int line) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, line));
  if (out.size() != expect)
    throw ParseError(line, "expected " + std::to_string(expect) + " comma-separated values, got " +
                               std::to_string(out.size()));
  return out;
}

struct RawMaterial {
  std::map<std::string, std::pair<std::string, int>> scalars;  // key -> (value, line)
  std::vector<std::pair<std::string, int>> terms;              // ninham oscillators
  std::vector<std::pair<std::string, int>> samples;            // tabulated points
};

const char* const kKnownKeys[] = {"name",       "kind",     "source", "ambient_index",
                                  "value",      "eps_inf",  "omega_p_sq", "gamma0",
                                  "beta",       "B",        "tau",    "eps_static",
                                  "eps_high",   "alpha"};

bool known_key(const std::string& k) {
  for (const char* key : kKnownKeys)
    if (k == key) return true;
  return k == "term" || k == "sample";
}

}  // namespace

DrudeParams builtin_table1(double ambient_index) {
  // Gold Drude parameters (eps_inf, omega_p^2 eV^2, gamma0 eV, beta eV^-1)
  // measured with the film in contact with media of refractive index n.
  struct Row {
    double n, eps_inf, omega_p_sq, gamma0, beta;
  };
  static constexpr Row rows[] = {
      {1.00, 7.76, 71.53, 0.0041, 0.0123},
      {1.33, 8.71, 79.97, 0.0049, 0.0153},
      {1.42, 9.17, 82.52, 0.0062, 0.0055},
      {1.51, 9.65, 85.60, 0.0066, 0.0059},
      {1.60, 10.30, 88.33, 0.0097, 0.0072},
  };
  for (const Row& r : rows)
    if (r.n == ambient_index)
      return DrudeParams{r.eps_inf, r.omega_p_sq, r.gamma0, r.beta, r.n};
  std::string keys;
  for (const Row& r : rows) keys += (keys.empty() ? "" : ", ") + std::to_string(r.n);
  throw std::out_of_range("builtin_table1: no row for ambient index " +
                          std::to_string(ambient_index) + "; valid: " + keys);
}

const std::vector<double>& builtin_table1_indices() {
  static const std::vector<double> idx{1.0, 1.33, 1.42, 1.51, 1.60};
  return idx;
}

MaterialRecord parse_material(const std::string& text, ColeColeForm form) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool in_section = false;
  RawMaterial raw;

  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line;
    const std::size_t hash = stripped.find('#');
    if (hash != std::string::npos) stripped.erase(hash);
    stripped = trim(stripped);
    if (stripped.empty()) continue;

    if (stripped == "[material]") {
      if (in_section) throw ParseError(lineno, "duplicate [material] section");
      in_section = true;
      continue;
    }
    if (stripped.front() == '[')
      throw ParseError(lineno, "unknown section '" + stripped + "'");
    if (!in_section)
      throw ParseError(lineno, "key before [material] section");

    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError(lineno, "expected 'key = value', got '" + stripped + "'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (!known_key(key)) throw ParseError(lineno, "unknown key '" + key + "'");
    if (value.empty()) throw ParseError(lineno, "empty value for '" + key + "'");

    if (key == "term")
      raw.terms.emplace_back(value, lineno);
    else if (key == "sample")
      raw.samples.emplace_back(value, lineno);
    else if (!raw.scalars.emplace(key, std::make_pair(value, lineno)).second)
      throw ParseError(lineno, "duplicate key '" + key + "'");
  }
  if (!in_section) throw ParseError(1, "missing [material] section");

  auto take = [&](const char* key) -> std::pair<std::string, int> {
    auto it = raw.scalars.find(key);
    if (it == raw.scalars.end())
      throw ParseError(lineno, std::string("missing mandatory key '") + key + "'");
    auto v = it->second;
    raw.scalars.erase(it);
    return v;
  };
  auto take_number = [&](const char* key) {
    auto [v, ln] = take(key);
    return parse_number(v, ln);
  };

  MaterialRecord rec;
  rec.name = take("name").first;
  rec.source = take("source").first;
  const auto [kind, kind_line] = take("kind");
  if (auto it = raw.scalars.find("ambient_index"); it != raw.scalars.end()) {
    rec.ambient_index = parse_number(it->second.first, it->second.second);
    raw.scalars.erase(it);
  }

  if (kind == "constant") {
    rec.model = DielectricModel::constant(take_number("value"));
  } else if (kind == "drude") {
    DrudeParams p;
    p.eps_inf = take_number("eps_inf");
    p.omega_p_sq = take_number("omega_p_sq");
    p.gamma0 = take_number("gamma0");
    p.beta = take_number("beta");
    p.ambient_index = rec.ambient_index.value_or(1.0);
    rec.model = DielectricModel::drude(p);
  } else if (kind == "ninham") {
    NinhamParams p;
    p.B = take_number("B");
    p.tau = take_number("tau");
    for (const auto& [v, ln] : raw.terms) {
      const auto nums = parse_number_list(v, 3, ln);
      p.terms.push_back({nums[0], nums[1], nums[2]});
    }
    rec.model = DielectricModel::ninham(p);
  } else if (kind == "colecole") {
    ColeColeParams p;
    p.eps_static = take_number("eps_static");
    p.eps_high = take_number("eps_high");
    p.tau = take_number("tau");
    p.alpha = take_number("alpha");
    rec.model = DielectricModel::cole_cole(p, form);
  } else if (kind == "tabulated") {
    std::vector<double> zeta, eps;
    for (const auto& [v, ln] : raw.samples) {
      const auto nums = parse_number_list(v, 2, ln);
      zeta.push_back(nums[0]);
      eps.push_back(nums[1]);
    }
    rec.model = DielectricModel::tabulated(std::move(zeta), std::move(eps));
  } else {
    throw ParseError(kind_line, "unknown kind '" + kind + "'");
  }

  if (kind != "ninham" && !raw.terms.empty())
    throw ParseError(raw.terms.front().second, "'term' only valid for kind = ninham");
  if (kind != "tabulated" && !raw.samples.empty())
    throw ParseError(raw.samples.front().second, "'sample' only valid for kind = tabulated");
  if (!raw.scalars.empty())
    throw ParseError(raw.scalars.begin()->second.second,
                     "key '" + raw.scalars.begin()->first + "' not valid for kind '" + kind + "'");
  if (rec.name.empty()) throw ParseError(1, "material name must be non-empty");
  return rec;
}

MaterialRecord parse_material_file(const std::string& path, ColeColeForm form) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open material file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_material(ss.str(), form);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

std::string serialize_material(const MaterialRecord& r) {
  std::ostringstream out;
  out << "[material]\n";
  out << "name = " << r.name << "\n";

  struct Visitor {
    std::ostringstream& out;
    void operator()(const detail::Vacuum&) const {
      // vacuum round-trips as a constant; it has no file-format kind
      out << "kind = constant\nvalue = " << fmt(1.0) << "\n";
    }
    void operator()(const detail::Constant& c) const {
      out << "kind = constant\nvalue = " << fmt(c.value) << "\n";
    }
    void operator()(const detail::Drude& d) const {
      out << "kind = drude\n";
      out << "eps_inf = " << fmt(d.params.eps_inf) << "\n";
      out << "omega_p_sq = " << fmt(d.params.omega_p_sq) << "\n";
      out << "gamma0 = " << fmt(d.params.gamma0) << "\n";
      out << "beta = " << fmt(d.params.beta) << "\n";
    }
    void operator()(const detail::Ninham& n) const {
      out << "kind = ninham\n";
      out << "B = " << fmt(n.params.B) << "\n";
      out << "tau = " << fmt(n.params.tau) << "\n";
      for (const auto& t : n.params.terms)
        out << "term = " << fmt(t.C) << ", " << fmt(t.omega) << ", " << fmt(t.g) << "\n";
    }
    void operator()(const detail::ColeCole& c) const {
      out << "kind = colecole\n";
      out << "eps_static = " << fmt(c.params.eps_static) << "\n";
      out << "eps_high = " << fmt(c.params.eps_high) << "\n";
      out << "tau = " << fmt(c.params.tau) << "\n";
      out << "alpha = " << fmt(c.params.alpha) << "\n";
    }
    void operator()(const detail::Bruggeman&) const {
      throw std::runtime_error("bruggeman composites have no file representation");
    }
    void operator()(const detail::Tabulated& t) const {
      out << "kind = tabulated\n";
      for (std::size_t i = 0; i < t.zeta.size(); ++i)
        out << "sample = " << fmt(t.zeta[i]) << ", " << fmt(t.eps[i]) << "\n";
    }
  };
  std::visit(Visitor{out}, r.model.variant());

  out << "source = " << r.source << "\n";
  if (r.ambient_index) out << "ambient_index = " << fmt(*r.ambient_index) << "\n";
  return out.str();
}

MaterialDatabase MaterialDatabase::load_directory(const std::string& dir, ColeColeForm form) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::runtime_error("material database directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".mat")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  MaterialDatabase db;
  for (const auto& f : files) db.insert(parse_material_file(f.string(), form));
  return db;
}

void MaterialDatabase::insert(MaterialRecord record) {
  const std::string name = record.name;
  if (!records_.emplace(name, std::move(record)).second)
    throw std::runtime_error("duplicate material name: " + name);
}

const MaterialRecord& MaterialDatabase::find(const std::string& name) const {
  auto it = records_.find(name);
  if (it == records_.end()) {
    std::string known;
    for (const auto& [k, v] : records_) known += (known.empty() ? "" : ", ") + k;
    throw std::out_of_range("unknown material '" + name + "'; database has: " +
                            (known.empty() ? "(nothing)" : known));
  }
  return it->second;
}

std::vector<std::string> MaterialDatabase::names() const {
  std::vector<std::string> out;
  out.reserve(records_.size());
  for (const auto& [k, v] : records_) out.push_back(k);
  return out;
}

std::string MaterialDatabase::serialize() const {
  std::string out;
  for (const auto& [k, v] : records_) {
    out += serialize_material(v);
    out += "\n";
  }
  return out;
}

}  // namespace lvdw
