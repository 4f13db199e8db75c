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

// framecensus command-line tool.
//
// Exit codes: 0 success, 1 failed verification or I/O error, 2 usage error,
// 3 unitary search budget exhausted.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "framecensus/catalog.h"
#include "framecensus/census.h"
#include "framecensus/counting.h"
#include "framecensus/equivalence.h"
#include "framecensus/errors.h"
#include "framecensus/frames.h"
#include "framecensus/numtheory.h"
#include "framecensus/verification.h"
#include "json.hpp"

namespace fc = framecensus;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

Json BigJson(const fc::BigInt& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(fc::ToDecimal(value));
}

Json RationalJson(const fc::ExactRational& value) {
  return {{"num", fc::ToDecimal(value.numerator())},
          {"den", fc::ToDecimal(value.denominator())}};
}

void PrintJson(const Json& value) { std::cout << value.dump(2) << "\n"; }

fc::IndexSubset ParseSubset(int n, const std::string& text, const std::string& flag) {
  if (n < 1) throw fc::UsageError("--n must be positive");
  std::vector<int> residues;
  std::set<int> seen;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw fc::UsageError(flag + ": '" + item + "' is not an integer");
    }
    const int residue = fc::ModN(value, n);
    if (!seen.insert(residue).second) {
      throw fc::UsageError(flag + ": residue " + std::to_string(residue) +
                           " appears more than once");
    }
    residues.push_back(residue);
  }
  if (residues.empty() || text.empty() || text.back() == ',') {
    throw fc::UsageError(flag + ": expected a comma-separated residue list");
  }
  return fc::IndexSubset::FromResidues(n, residues);
}

int DefaultWorkers() {
  const char* env = std::getenv("FRAMECENSUS_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 1024) {
    throw fc::UsageError("FRAMECENSUS_WORKERS must be an integer in [1, 1024]");
  }
  return static_cast<int>(value);
}

std::string Approx(const fc::ExactRational& value) {
  std::ostringstream out;
  out << std::setprecision(12) << value.ToDouble();
  return out.str();
}

struct CountArgs {
  int n = 0;
  int d = 0;
  std::string which = "m";
  bool json = false;
};

int RunCount(const CountArgs& args) {
  Json out{{"n", args.n}, {"d", args.d}, {"which", args.which}};
  if (args.which == "a") {
    const fc::ExactRational a = fc::AsymptoticA(args.n, args.d);
    if (args.json) {
      out["value"] = RationalJson(a);
      out["approx"] = a.ToDouble();
      PrintJson(out);
    } else {
      std::cout << a.ToString() << " (" << Approx(a) << ")\n";
    }
    return 0;
  }
  fc::BigInt value;
  if (args.which == "m") value = fc::BurnsideM(args.n, args.d);
  else if (args.which == "p") value = fc::BurnsideP(args.n, args.d);
  else if (args.which == "gen") value = fc::CountGeneratingSubsets(args.n, args.d);
  else value = fc::HallEulerian(args.n, args.d);
  if (args.json) {
    out["value"] = BigJson(value);
    PrintJson(out);
  } else {
    std::cout << fc::ToDecimal(value) << "\n";
  }
  return 0;
}

struct PrimeArgs {
  int p = 0;
  int d = 0;
  std::string which = "total";
  bool json = false;
};

int RunPrime(const PrimeArgs& args) {
  if (!fc::IsPrime(args.p)) {
    throw fc::UsageError(std::to_string(args.p) + " is not prime");
  }
  fc::BigInt value;
  if (args.which == "u") value = fc::PrimeUnlifted(args.p, args.d);
  else if (args.which == "l") value = fc::PrimeLifted(args.p, args.d);
  else if (args.which == "real") value = fc::PrimeReal(args.p, args.d);
  else value = fc::PrimeUnlifted(args.p, args.d) + fc::PrimeLifted(args.p, args.d);
  if (args.json) {
    PrintJson({{"p", args.p}, {"d", args.d}, {"which", args.which}, {"value", BigJson(value)}});
  } else {
    std::cout << fc::ToDecimal(value) << "\n";
  }
  return 0;
}

struct EquivArgs {
  int n = 0;
  std::string j;
  std::string k;
  std::string kind = "mult";
  std::uint64_t budget = fc::kDefaultNodeBudget;
  bool json = false;
};

int RunEquiv(const EquivArgs& args) {
  const fc::IndexSubset j = ParseSubset(args.n, args.j, "--j");
  const fc::IndexSubset k = ParseSubset(args.n, args.k, "--k");
  if (j.size() != k.size()) throw fc::UsageError("--j and --k must have the same size");

  Json out{{"n", args.n}, {"j", j.elements()}, {"k", k.elements()}, {"kind", args.kind}};
  std::string line;
  bool verdict = false;
  if (args.kind == "mult") {
    if (auto a = fc::FindMultWitness(j, k)) {
      verdict = true;
      out["a"] = *a;
      line = "yes a=" + std::to_string(*a);
    }
  } else if (args.kind == "affine") {
    if (auto map = fc::FindAffineWitness(j, k)) {
      verdict = true;
      out["a"] = map->multiplier;
      out["b"] = map->shift;
      line = "yes a=" + std::to_string(map->multiplier) + " b=" + std::to_string(map->shift);
    }
  } else {
    fc::UnitarySearchStats stats;
    const auto witness = fc::UnitarilyEquivalent(j, k, {args.budget}, &stats);
    out["nodes"] = stats.nodes;
    const bool mult = fc::MultEquivalent(j, k);
    verdict = witness.has_value() && (args.kind == "unitary" || !mult);
    if (witness) {
      out["sigma"] = witness->permutation;
      out["cycles"] = witness->CycleString();
    }
    if (args.kind == "exceptional") out["mult_equivalent"] = mult;
    if (verdict) {
      line = "yes sigma=" + witness->CycleString();
    } else if (witness) {
      line = "no (multiplicatively equivalent)";
    }
  }
  if (!verdict && line.empty()) line = "no";
  out["equivalent"] = verdict;
  if (args.json) PrintJson(out);
  else std::cout << line << "\n";
  return 0;
}

struct CensusArgs {
  int n = 0;
  int d = 0;
  std::string out;
  std::string format = "json";
  std::uint64_t budget = fc::kDefaultNodeBudget;
  std::optional<int> workers;
  bool json = false;
};

int RunCensusCommand(const CensusArgs& args) {
  const auto format = fc::ParseCatalogFormat(args.format);
  if (!format) throw fc::UsageError("--format must be json or csv");
  fc::CensusOptions options{args.budget, args.workers.value_or(DefaultWorkers())};
  if (options.workers < 1) throw fc::UsageError("--workers must be positive");
  const fc::CensusReport report = fc::RunCensus(args.n, args.d, options);
  if (!args.out.empty()) {
    fc::WriteFileAtomically(args.out, fc::ExportCatalog(report, *format));
  }
  if (args.json) {
    Json out{{"n", report.n}, {"d", report.d}, {"m", BigJson(report.m)}};
    if (report.h_exact()) out["h"] = BigJson(report.h_max);
    else out["h"] = {{"min", BigJson(report.h_min)}, {"max", BigJson(report.h_max)}};
    out["a"] = RationalJson(report.a);
    Json exceptional = Json::array();
    for (const auto& pair : report.exceptional_pairs) {
      exceptional.push_back({pair.first.elements(), pair.second.elements()});
    }
    out["exceptional_pairs"] = std::move(exceptional);
    Json unresolved = Json::array();
    for (const auto& pair : report.unresolved_pairs) {
      unresolved.push_back({pair.first.elements(), pair.second.elements()});
    }
    out["unresolved_pairs"] = std::move(unresolved);
    if (!args.out.empty()) out["output"] = args.out;
    PrintJson(out);
  } else {
    std::cout << fc::CensusSummary(report) << "\n";
    for (const auto& pair : report.unresolved_pairs) {
      std::cout << "UNRESOLVED " << pair.first.ToString() << " "
                << pair.second.ToString() << "\n";
    }
  }
  return 0;
}

struct VerifyArgs {
  int max_n = 12;
  int max_d = 3;
  std::uint64_t budget = fc::kDefaultNodeBudget;
  std::optional<int> workers;
  std::string inject_fault;
  bool json = false;
};

// "N:D:A" adds one to the fixed-point count of x -> A*x in the (N, D) table.
std::function<void(fc::FixCountTable&)> ParseFault(const std::string& text) {
  int n = 0, d = 0, a = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> n >> c1 >> d >> c2 >> a) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw fc::UsageError("--inject-fault expects N:D:A");
  }
  return [n, d, a](fc::FixCountTable& table) {
    if (table.modulus != n || table.dimension != d) return;
    auto it = table.entries.find({fc::ModN(a, n), 0});
    if (it != table.entries.end()) it->second += 1;
  };
}

int RunVerify(const VerifyArgs& args) {
  fc::VerifyOptions options;
  options.max_n = args.max_n;
  options.max_d = args.max_d;
  options.node_budget = args.budget;
  options.workers = args.workers.value_or(DefaultWorkers());
  if (!args.inject_fault.empty()) options.tamper = ParseFault(args.inject_fault);
  const fc::VerifyReport report = fc::RunVerification(options);

  if (args.json) {
    Json failures = Json::array();
    for (const auto& check : report.checks) {
      if (!check.passed) failures.push_back({{"name", check.name}, {"detail", check.detail}});
    }
    PrintJson({{"max_n", args.max_n},
               {"max_d", args.max_d},
               {"checks", report.checks.size()},
               {"failures", std::move(failures)},
               {"passed", report.passed()}});
  } else {
    for (const auto& check : report.checks) {
      if (!check.passed) std::cout << "FAIL " << check.name << ": " << check.detail << "\n";
    }
    std::cout << "verify max_n=" << args.max_n << " max_d=" << args.max_d << ": "
              << report.checks.size() << " checks, " << report.failures() << " failed\n";
    std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and classifying cyclic harmonic frames."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "framecensus 1.0.0");

  int status = 0;

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Exact orbit counts m, p, a, gen, hall");
  count_cmd->add_option("--n", count.n, "Modulus")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--d", count.d, "Dimension")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--which", count.which, "Quantity")
      ->check(CLI::IsMember({"m", "p", "a", "gen", "hall"}));
  count_cmd->add_flag("--json", count.json, "Emit JSON");

  PrimeArgs prime;
  auto* prime_cmd = app.add_subcommand("prime", "Closed forms for prime modulus");
  prime_cmd->add_option("--p", prime.p, "Prime modulus")->required();
  prime_cmd->add_option("--d", prime.d, "Dimension")->required()->check(CLI::PositiveNumber);
  prime_cmd->add_option("--which", prime.which, "u, l, total or real")
      ->check(CLI::IsMember({"u", "l", "total", "real"}));
  prime_cmd->add_flag("--json", prime.json, "Emit JSON");

  EquivArgs equiv;
  auto* equiv_cmd = app.add_subcommand("equiv", "Test equivalence of two index subsets");
  equiv_cmd->add_option("--n", equiv.n, "Modulus")->required()->check(CLI::PositiveNumber);
  equiv_cmd->add_option("--j", equiv.j, "First subset, e.g. 1,2,5")->required();
  equiv_cmd->add_option("--k", equiv.k, "Second subset")->required();
  equiv_cmd->add_option("--kind", equiv.kind, "mult, affine, unitary or exceptional")
      ->check(CLI::IsMember({"mult", "affine", "unitary", "exceptional"}));
  equiv_cmd->add_option("--budget", equiv.budget, "Unitary search node budget")
      ->check(CLI::PositiveNumber);
  equiv_cmd->add_flag("--json", equiv.json, "Emit JSON");

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Classify all cyclic harmonic frames");
  census_cmd->add_option("--n", census.n, "Modulus")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--d", census.d, "Dimension")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--out", census.out, "Catalog path");
  census_cmd->add_option("--format", census.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  census_cmd->add_option("--budget", census.budget, "Unitary search node budget")
      ->check(CLI::PositiveNumber);
  census_cmd->add_option("--workers", census.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  census_cmd->add_flag("--json", census.json, "Emit JSON");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-check battery");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest modulus")
      ->check(CLI::Range(1, 64));
  verify_cmd->add_option("--max-d", verify.max_d, "Largest dimension")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget", verify.budget, "Unitary search node budget")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--workers", verify.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--inject-fault", verify.inject_fault)->group("");
  verify_cmd->add_flag("--json", verify.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) status = RunCount(count);
    else if (*prime_cmd) status = RunPrime(prime);
    else if (*equiv_cmd) status = RunEquiv(equiv);
    else if (*census_cmd) status = RunCensusCommand(census);
    else if (*verify_cmd) status = RunVerify(verify);
  } catch (const fc::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fc::SearchBudgetExceeded& e) {
    std::cerr << "error: unitary search budget exhausted after " << e.nodes()
              << " nodes (budget " << e.budget() << "); raise --budget\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return status;
}
