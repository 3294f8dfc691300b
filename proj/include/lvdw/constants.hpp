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

namespace lvdw {

/// Physical constants used throughout, CODATA values at full printed
/// precision. All internal energies/frequencies are in eV (hbar = 1),
/// all lengths in nm, so pressures come out in eV/nm^3 and are converted
/// to pascal with pascal_per_eV_nm3.
namespace constants {

/// hbar*c in eV*nm.
inline constexpr double hbar_c_eV_nm = 197.3269804;

/// 1 eV/nm^3 expressed in Pa (exact, from the 2019 SI definition of the eV).
inline constexpr double pascal_per_eV_nm3 = 1.602176634e8;

}  // namespace constants

}  // namespace lvdw
