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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lvdw/dielectric.hpp"

namespace lvdw {

/// Parse failure in a material file; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A named dielectric model with mandatory provenance.
struct MaterialRecord {
  std::string name;
  DielectricModel model = DielectricModel::vacuum();
  std::string source;  ///< where the numbers come from; never empty
  std::optional<double> ambient_index;
};

/// Gold Drude parameters measured with the film immersed in media of the
/// given refractive index. Valid indices: 1, 1.33, 1.42, 1.51, 1.60; anything
/// else is a lookup error listing the valid keys.
DrudeParams builtin_table1(double ambient_index);

/// All ambient indices builtin_table1 accepts, ascending.
const std::vector<double>& builtin_table1_indices();

/// Parse one `[material]` section in the line-oriented key = value format.
/// Unknown keys are rejected; every numeric field is range-checked; the
/// `source` field is mandatory. `form` selects how Cole-Cole models read
/// their limits (Physical unless the caller asks for the literal variant).
MaterialRecord parse_material(const std::string& text,
                              ColeColeForm form = ColeColeForm::Physical);

/// parse_material over a file's contents.
MaterialRecord parse_material_file(const std::string& path,
                                   ColeColeForm form = ColeColeForm::Physical);

/// Normalized serialization; parse(serialize(r)) reproduces r exactly and
/// serialize is idempotent across a parse round-trip.
std::string serialize_material(const MaterialRecord& r);

/// Immutable set of materials keyed by name. Loading is deterministic:
/// records are kept sorted by name, so identical files give byte-identical
/// serializations.
class MaterialDatabase {
 public:
  /// Loads every *.mat file under dir (non-recursive).
  static MaterialDatabase load_directory(const std::string& dir,
                                         ColeColeForm form = ColeColeForm::Physical);

  void insert(MaterialRecord record);
  const MaterialRecord& find(const std::string& name) const;
  bool contains(const std::string& name) const { return records_.count(name) > 0; }
  std::vector<std::string> names() const;
  std::string serialize() const;

 private:
  std::map<std::string, MaterialRecord> records_;
};

}  // namespace lvdw
