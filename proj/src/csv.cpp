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

#include "lvdw/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lvdw {

namespace {

const char* kind_label(CurveKind kind) {
  return kind == CurveKind::PressurePa ? "pressure_Pa" : "delta_percent";
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.14e", v);
  return buf;
}

std::string curve_to_csv(const ForceCurve& curve) {
  std::string out = "separation_nm,value,value_kind\n";
  const char* label = kind_label(curve.kind);
  for (const auto& p : curve.points) {
    out += format_number(p.separation_nm);
    out += ',';
    out += format_number(p.value);
    out += ',';
    out += label;
    out += '\n';
  }
  return out;
}

ForceCurve curve_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "separation_nm,value,value_kind")
    throw std::runtime_error("curve CSV: bad header");
  ForceCurve curve;
  bool kind_set = false;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string sep, val, kind;
    if (!std::getline(row, sep, ',') || !std::getline(row, val, ',') || !std::getline(row, kind))
      throw std::runtime_error("curve CSV: malformed record at line " + std::to_string(lineno));
    CurveKind k;
    if (kind == "pressure_Pa")
      k = CurveKind::PressurePa;
    else if (kind == "delta_percent")
      k = CurveKind::DeltaPercent;
    else
      throw std::runtime_error("curve CSV: unknown value_kind '" + kind + "'");
    if (!kind_set) {
      curve.kind = k;
      kind_set = true;
    } else if (k != curve.kind) {
      throw std::runtime_error("curve CSV: mixed value kinds");
    }
    curve.points.push_back({std::strtod(sep.c_str(), nullptr), std::strtod(val.c_str(), nullptr)});
  }
  return curve;
}

std::size_t write_curve_csv(const ForceCurve& curve, const std::string& path) {
  return write_file_atomic(path, curve_to_csv(curve));
}

std::string eps_ratio_to_csv(const std::vector<EpsRatioRow>& rows) {
  std::string out = "zeta_over_omega_pD,eps_ratio,ambient_index\n";
  for (const auto& r : rows) {
    out += format_number(r.zeta_over_omega_pD);
    out += ',';
    out += format_number(r.eps_ratio);
    out += ',';
    out += format_number(r.ambient_index);
    out += '\n';
  }
  return out;
}

std::size_t write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
  return content.size();
}

}  // namespace lvdw
