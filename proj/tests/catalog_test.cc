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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "framecensus/counting.h"
#include "framecensus/errors.h"

namespace framecensus {
namespace {

CensusReport RoundTrip(const CensusReport& report) {
  return ImportCatalog(ExportCatalog(report, CatalogFormat::kJson));
}

TEST(Catalog, JsonRoundTrip) {
  for (auto [n, d] : {std::pair{8, 3}, std::pair{8, 2}, std::pair{12, 4}, std::pair{1, 1}}) {
    CensusReport report = RunCensus(n, d);
    EXPECT_EQ(RoundTrip(report), report) << n << " " << d;
  }
}

TEST(Catalog, RoundTripWithUnresolvedPairs) {
  CensusOptions tight;
  tight.node_budget = 1;
  CensusReport report = RunCensus(8, 3, tight);
  ASSERT_FALSE(report.h_exact());
  const std::string json = ExportCatalog(report, CatalogFormat::kJson);
  EXPECT_NE(json.find("\"min\": 16"), std::string::npos);
  EXPECT_EQ(ImportCatalog(json), report);
}

TEST(Catalog, BigIntegersSurvive) {
  CensusReport report = RunCensus(8, 3);
  report.m = PrimeUnlifted(101, 10) + PrimeLifted(101, 10);
  report.h_min = report.h_max = PrimeUnlifted(101, 30);
  report.a = AsymptoticA(101, 30);
  ASSERT_FALSE(report.h_max.fits_slong_p());
  ASSERT_FALSE(report.a.numerator().fits_slong_p());
  CensusReport back = RoundTrip(report);
  EXPECT_EQ(back, report);
  EXPECT_EQ(back.h_max, PrimeUnlifted(101, 30));
}

TEST(Catalog, SchemaKeys) {
  const std::string json = ExportCatalog(RunCensus(8, 3), CatalogFormat::kJson);
  for (const char* key : {"\"n\"", "\"d\"", "\"m\"", "\"h\"", "\"a\"", "\"num\"", "\"den\"",
                          "\"classes\"", "\"rep\"", "\"orbit_size\"", "\"real\"", "\"lifted\"",
                          "\"component\"", "\"exceptional_pairs\"", "\"unresolved_pairs\"",
                          "\"version\": \"1\""}) {
    EXPECT_NE(json.find(key), std::string::npos) << key;
  }
}

TEST(Catalog, Csv) {
  const std::string csv = ExportCatalog(RunCensus(8, 2), CatalogFormat::kCsv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "rep;orbit_size;real;lifted;component");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 7);
  EXPECT_NE(csv.find("1,7;2;true;false;6"), std::string::npos);
}

TEST(Catalog, ParseErrorsNameTheField) {
  const std::string good = ExportCatalog(RunCensus(8, 3), CatalogFormat::kJson);
  auto field_of = [](const std::string& text) -> std::string {
    try {
      ImportCatalog(text);
    } catch (const CatalogParseError& e) {
      return e.field();
    }
    return "no error";
  };
  EXPECT_EQ(field_of(good.substr(0, good.size() / 2)), "<document>");
  EXPECT_EQ(field_of(""), "<document>");
  EXPECT_EQ(field_of("[]"), "<document>");

  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string text = good;
    const auto at = text.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    return text.replace(at, from.size(), to);
  };
  EXPECT_EQ(field_of(replaced("\"version\": \"1\"", "\"version\": \"2\"")), "version");
  EXPECT_EQ(field_of(replaced("\"m\": 17", "\"m\": \"seventeen\"")), "m");
  EXPECT_EQ(field_of(replaced("\"m\": 17", "\"q\": 17")), "m");
  EXPECT_EQ(field_of(replaced("\"real\": false", "\"real\": 0")), "classes[0].real");
  EXPECT_EQ(field_of(replaced("\"den\": \"3\"", "\"den\": \"0\"")), "a.den");
}

TEST(Catalog, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "framecensus_catalog_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "c.json";
  WriteFileAtomically(path, "first");
  WriteFileAtomically(path, "second");
  std::ifstream in(path);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(contents, "second");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& entry : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(WriteFileAtomically(dir / "missing" / "x.json", "data"), std::runtime_error);
}

TEST(Catalog, FormatNames) {
  EXPECT_EQ(ParseCatalogFormat("json"), CatalogFormat::kJson);
  EXPECT_EQ(ParseCatalogFormat("csv"), CatalogFormat::kCsv);
  EXPECT_EQ(ParseCatalogFormat("xml"), std::nullopt);
}

}  // namespace
}  // namespace framecensus
