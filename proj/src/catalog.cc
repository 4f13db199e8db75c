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

#include "framecensus/catalog.h"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "framecensus/errors.h"
#include "json.hpp"

namespace framecensus {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "1";

Json BigToJson(const BigInt& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(ToDecimal(value));
}

Json SubsetToJson(const IndexSubset& subset) { return Json(subset.elements()); }

Json PairToJson(const IndexSubset& first, const IndexSubset& second) {
  return Json::array({SubsetToJson(first), SubsetToJson(second)});
}

// Typed accessors that report the JSON path on failure.
class Reader {
 public:
  Reader(int n, int d) : n_(n), d_(d) {}

  static const Json& Field(const Json& object, const std::string& key,
                           const std::string& path) {
    if (!object.is_object()) throw CatalogParseError(path, "expected an object");
    auto it = object.find(key);
    if (it == object.end()) throw CatalogParseError(Join(path, key), "missing");
    return *it;
  }

  static std::string Join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  static std::string Index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
  }

  static std::int64_t Int(const Json& value, const std::string& path) {
    if (!value.is_number_integer()) throw CatalogParseError(path, "expected an integer");
    return value.get<std::int64_t>();
  }

  static int SmallInt(const Json& value, const std::string& path) {
    std::int64_t v = Int(value, path);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      throw CatalogParseError(path, "integer out of range");
    }
    return static_cast<int>(v);
  }

  static std::uint64_t Unsigned(const Json& value, const std::string& path) {
    if (value.is_number_unsigned()) return value.get<std::uint64_t>();
    if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
      return static_cast<std::uint64_t>(value.get<std::int64_t>());
    }
    throw CatalogParseError(path, "expected a non-negative integer");
  }

  static bool Bool(const Json& value, const std::string& path) {
    if (!value.is_boolean()) throw CatalogParseError(path, "expected a boolean");
    return value.get<bool>();
  }

  static BigInt Big(const Json& value, const std::string& path) {
    if (value.is_number_unsigned()) {
      return BigInt(std::to_string(value.get<std::uint64_t>()));
    }
    if (value.is_number_integer()) {
      return BigInt(std::to_string(value.get<std::int64_t>()));
    }
    if (value.is_string()) {
      const std::string& text = value.get_ref<const std::string&>();
      std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
      if (text.size() == start ||
          text.find_first_not_of("0123456789", start) != std::string::npos) {
        throw CatalogParseError(path, "expected a decimal integer string");
      }
      return BigInt(text);
    }
    throw CatalogParseError(path, "expected an integer or decimal string");
  }

  static const Json& Array(const Json& value, const std::string& path) {
    if (!value.is_array()) throw CatalogParseError(path, "expected an array");
    return value;
  }

  IndexSubset Subset(const Json& value, const std::string& path) const {
    Array(value, path);
    std::vector<int> elements;
    for (std::size_t i = 0; i < value.size(); ++i) {
      elements.push_back(SmallInt(value[i], Index(path, i)));
    }
    if (static_cast<int>(elements.size()) != d_) {
      throw CatalogParseError(path, "expected " + std::to_string(d_) + " residues");
    }
    try {
      return IndexSubset(n_, std::move(elements));
    } catch (const UsageError& e) {
      throw CatalogParseError(path, e.what());
    }
  }

  std::pair<IndexSubset, IndexSubset> Pair(const Json& value,
                                           const std::string& path) const {
    Array(value, path);
    if (value.size() != 2) throw CatalogParseError(path, "expected two subsets");
    return {Subset(value[0], Index(path, 0)), Subset(value[1], Index(path, 1))};
  }

 private:
  int n_;
  int d_;
};

std::string CsvRow(const ClassRecord& record) {
  std::ostringstream out;
  const auto& elements = record.representative.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out << ',';
    out << elements[i];
  }
  out << ';' << record.orbit_size << ';' << (record.real ? "true" : "false") << ';'
      << (record.lifted ? "true" : "false") << ';' << record.component << '\n';
  return out.str();
}

}  // namespace

std::optional<CatalogFormat> ParseCatalogFormat(std::string_view name) {
  if (name == "json") return CatalogFormat::kJson;
  if (name == "csv") return CatalogFormat::kCsv;
  return std::nullopt;
}

std::string ExportCatalog(const CensusReport& report, CatalogFormat format) {
  if (format == CatalogFormat::kCsv) {
    std::string out = "rep;orbit_size;real;lifted;component\n";
    for (const auto& record : report.classes) out += CsvRow(record);
    return out;
  }

  Json root;
  root["n"] = report.n;
  root["d"] = report.d;
  root["m"] = BigToJson(report.m);
  if (report.h_exact()) {
    root["h"] = BigToJson(report.h_max);
  } else {
    root["h"] = {{"min", BigToJson(report.h_min)}, {"max", BigToJson(report.h_max)}};
  }
  root["a"] = {{"num", ToDecimal(report.a.numerator())},
               {"den", ToDecimal(report.a.denominator())}};
  Json classes = Json::array();
  for (const auto& record : report.classes) {
    classes.push_back({{"rep", SubsetToJson(record.representative)},
                       {"orbit_size", record.orbit_size},
                       {"real", record.real},
                       {"lifted", record.lifted},
                       {"component", record.component}});
  }
  root["classes"] = std::move(classes);
  Json exceptional = Json::array();
  for (const auto& pair : report.exceptional_pairs) {
    exceptional.push_back(PairToJson(pair.first, pair.second));
  }
  root["exceptional_pairs"] = std::move(exceptional);
  Json unresolved = Json::array();
  for (const auto& pair : report.unresolved_pairs) {
    unresolved.push_back(PairToJson(pair.first, pair.second));
  }
  root["unresolved_pairs"] = std::move(unresolved);
  root["version"] = kVersion;

  Json witnesses = Json::array();
  for (const auto& pair : report.exceptional_pairs) {
    Json fingerprint = Json::array();
    for (const auto& residue : pair.fingerprint.values) {
      Json coefficients = Json::array();
      for (const auto& c : residue) coefficients.push_back(BigToJson(c));
      fingerprint.push_back(std::move(coefficients));
    }
    witnesses.push_back({{"pair", PairToJson(pair.first, pair.second)},
                         {"sigma", pair.witness.permutation},
                         {"cycles", pair.witness.CycleString()},
                         {"fingerprint", std::move(fingerprint)}});
  }
  root["audit"] = {{"node_budget", report.metadata.node_budget},
                   {"search_nodes", report.metadata.search_nodes},
                   {"workers", report.metadata.workers},
                   {"elapsed_us", report.metadata.elapsed_us},
                   {"exceptional", std::move(witnesses)}};
  return root.dump(2) + "\n";
}

CensusReport ImportCatalog(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw CatalogParseError("<document>", e.what());
  }
  if (!root.is_object()) throw CatalogParseError("<document>", "expected an object");

  const Json& version = Reader::Field(root, "version", "");
  if (!version.is_string() || version.get<std::string>() != kVersion) {
    throw CatalogParseError("version", "unsupported catalog version");
  }

  CensusReport report;
  report.n = Reader::SmallInt(Reader::Field(root, "n", ""), "n");
  report.d = Reader::SmallInt(Reader::Field(root, "d", ""), "d");
  if (report.n < 1) throw CatalogParseError("n", "must be positive");
  if (report.d < 1 || report.d > report.n) {
    throw CatalogParseError("d", "must satisfy 1 <= d <= n");
  }
  Reader reader(report.n, report.d);
  report.m = Reader::Big(Reader::Field(root, "m", ""), "m");

  const Json& h = Reader::Field(root, "h", "");
  if (h.is_object()) {
    report.h_min = Reader::Big(Reader::Field(h, "min", "h"), "h.min");
    report.h_max = Reader::Big(Reader::Field(h, "max", "h"), "h.max");
  } else {
    report.h_min = report.h_max = Reader::Big(h, "h");
  }

  const Json& a = Reader::Field(root, "a", "");
  BigInt num = Reader::Big(Reader::Field(a, "num", "a"), "a.num");
  BigInt den = Reader::Big(Reader::Field(a, "den", "a"), "a.den");
  if (den == 0) throw CatalogParseError("a.den", "zero denominator");
  report.a = ExactRational(num, den);

  const Json& classes = Reader::Array(Reader::Field(root, "classes", ""), "classes");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string path = Reader::Index("classes", i);
    const Json& entry = classes[i];
    ClassRecord record{
        reader.Subset(Reader::Field(entry, "rep", path), path + ".rep"),
        Reader::SmallInt(Reader::Field(entry, "orbit_size", path), path + ".orbit_size"),
        Reader::Bool(Reader::Field(entry, "real", path), path + ".real"),
        Reader::Bool(Reader::Field(entry, "lifted", path), path + ".lifted"),
        Reader::SmallInt(Reader::Field(entry, "component", path), path + ".component")};
    report.classes.push_back(std::move(record));
  }

  const Json& audit = root.contains("audit") ? root["audit"] : Json::object();
  const Json& witnesses =
      audit.contains("exceptional") ? audit["exceptional"] : Json::array();
  Reader::Array(witnesses, "audit.exceptional");

  const Json& exceptional =
      Reader::Array(Reader::Field(root, "exceptional_pairs", ""), "exceptional_pairs");
  for (std::size_t i = 0; i < exceptional.size(); ++i) {
    const std::string path = Reader::Index("exceptional_pairs", i);
    auto [first, second] = reader.Pair(exceptional[i], path);
    ExceptionalPair pair{std::move(first), std::move(second), {}, {report.n, {}}};
    if (i < witnesses.size()) {
      const std::string wpath = Reader::Index("audit.exceptional", i);
      const Json& w = witnesses[i];
      const Json& sigma = Reader::Array(Reader::Field(w, "sigma", wpath), wpath + ".sigma");
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        pair.witness.permutation.push_back(
            Reader::SmallInt(sigma[k], Reader::Index(wpath + ".sigma", k)));
      }
      const std::string fpath = wpath + ".fingerprint";
      const Json& fingerprint = Reader::Array(Reader::Field(w, "fingerprint", wpath), fpath);
      for (std::size_t k = 0; k < fingerprint.size(); ++k) {
        const std::string rpath = Reader::Index(fpath, k);
        const Json& coefficients = Reader::Array(fingerprint[k], rpath);
        Residue residue;
        for (std::size_t c = 0; c < coefficients.size(); ++c) {
          residue.push_back(Reader::Big(coefficients[c], Reader::Index(rpath, c)));
        }
        pair.fingerprint.values.push_back(std::move(residue));
      }
    }
    report.exceptional_pairs.push_back(std::move(pair));
  }

  const Json& unresolved =
      Reader::Array(Reader::Field(root, "unresolved_pairs", ""), "unresolved_pairs");
  for (std::size_t i = 0; i < unresolved.size(); ++i) {
    auto [first, second] = reader.Pair(unresolved[i], Reader::Index("unresolved_pairs", i));
    report.unresolved_pairs.push_back({std::move(first), std::move(second)});
  }

  if (audit.contains("node_budget")) {
    report.metadata.node_budget =
        Reader::Unsigned(audit["node_budget"], "audit.node_budget");
  }
  if (audit.contains("search_nodes")) {
    report.metadata.search_nodes =
        Reader::Unsigned(audit["search_nodes"], "audit.search_nodes");
  }
  if (audit.contains("workers")) {
    report.metadata.workers = Reader::SmallInt(audit["workers"], "audit.workers");
  }
  if (audit.contains("elapsed_us")) {
    report.metadata.elapsed_us = Reader::Int(audit["elapsed_us"], "audit.elapsed_us");
  }
  return report;
}

void WriteFileAtomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path temp = path;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw std::runtime_error("failed writing " + temp.string());
    }
  }
  std::error_code error;
  std::filesystem::rename(temp, path, error);
  if (error) {
    std::filesystem::remove(temp, error);
    throw std::runtime_error("cannot rename onto " + path.string());
  }
}

}  // namespace framecensus
