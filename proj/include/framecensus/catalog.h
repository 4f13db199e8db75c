// Copyright 2026 The framecensus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMECENSUS_CATALOG_H_
#define FRAMECENSUS_CATALOG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "framecensus/census.h"

namespace framecensus {

enum class CatalogFormat { kJson, kCsv };

// "json" or "csv"; nullopt otherwise.
std::optional<CatalogFormat> ParseCatalogFormat(std::string_view name);

// JSON keys: n, d, m, h, a, classes, exceptional_pairs, unresolved_pairs,
// version, plus an "audit" object holding search metadata and the exact
// fingerprints of exceptional pairs. Integers that do not fit in 64 bits are
// written as decimal strings. CSV holds the class table only, one row per
// class, columns rep;orbit_size;real;lifted;component.
std::string ExportCatalog(const CensusReport& report, CatalogFormat format);

// Parses a JSON catalog. Throws CatalogParseError naming the first bad field;
// nothing is returned on failure.
CensusReport ImportCatalog(std::string_view json);

// Writes via a sibling temporary file and rename.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents);

}  // namespace framecensus

#endif  // FRAMECENSUS_CATALOG_H_
