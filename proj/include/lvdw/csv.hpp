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

#include <cstddef>
#include <string>

#include "lvdw/lifshitz.hpp"

namespace lvdw {

/// One Figure-1-style sample: eps(i*zeta)/eps_dry(i*zeta) at a frequency
/// normalized to the dry plasma frequency.
struct EpsRatioRow {
  double zeta_over_omega_pD;
  double eps_ratio;
  double ambient_index;
};

/// Scientific notation, 15 significant digits, '.' decimal separator.
std::string format_number(double v);

/// Curve CSV: header `separation_nm,value,value_kind`, one record per line,
/// LF endings. Returns the serialized text.
std::string curve_to_csv(const ForceCurve& curve);

/// Re-reads what curve_to_csv wrote (full printed precision).
ForceCurve curve_from_csv(const std::string& text);

/// Writes curve_to_csv output to `path` (atomically: temp file + rename).
/// Returns the byte count written.
std::size_t write_curve_csv(const ForceCurve& curve, const std::string& path);

/// Eps-curve CSV: header `zeta_over_omega_pD,eps_ratio,ambient_index`.
std::string eps_ratio_to_csv(const std::vector<EpsRatioRow>& rows);

/// Writes arbitrary text atomically (temp file + rename); returns bytes.
std::size_t write_file_atomic(const std::string& path, const std::string& content);

}  // namespace lvdw
