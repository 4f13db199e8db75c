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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "framecensus/catalog.h"
#include "framecensus/census.h"
#include "framecensus/counting.h"
#include "framecensus/equivalence.h"
#include "framecensus/errors.h"
#include "framecensus/frames.h"
#include "framecensus/numtheory.h"
#include "framecensus/verification.h"

namespace py = pybind11;
namespace fc = framecensus;

namespace pybind11::detail {

// Python int <-> mpz_class through decimal text.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
    if (!text) return false;
    return value.set_str(text.cast<std::string>(), 10) == 0;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str(10).c_str(), nullptr, 10);
  }
};

// ExactRational -> fractions.Fraction.
template <>
struct type_caster<fc::ExactRational> {
  PYBIND11_TYPE_CASTER(fc::ExactRational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
    mpz_class num = src.attr("numerator").cast<mpz_class>();
    mpz_class den = src.attr("denominator").cast<mpz_class>();
    value = fc::ExactRational(num, den);
    return true;
  }

  static handle cast(const fc::ExactRational& src, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(pybind11::cast(src.numerator()), pybind11::cast(src.denominator()))
        .release();
  }
};

}  // namespace pybind11::detail

namespace {

fc::IndexSubset Subset(int n, const std::vector<int>& residues) {
  return fc::IndexSubset::FromResidues(n, residues);
}

py::dict ClassDict(const fc::ClassRecord& record) {
  py::dict out;
  out["rep"] = record.representative.elements();
  out["orbit_size"] = record.orbit_size;
  out["real"] = record.real;
  out["lifted"] = record.lifted;
  out["component"] = record.component;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counting and classification of cyclic harmonic frames.";

  py::register_exception<fc::SearchBudgetExceeded>(m, "SearchBudgetExceeded",
                                                   PyExc_RuntimeError);
  py::register_exception<fc::CatalogParseError>(m, "CatalogParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const fc::UsageError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("euler_phi", &fc::EulerPhi, py::arg("n"));
  m.def("moebius", &fc::Moebius, py::arg("n"));
  m.def("divisors", &fc::Divisors, py::arg("n"));
  m.def("units", &fc::Units, py::arg("n"));

  m.def("count_generating", &fc::CountGeneratingSubsets, py::arg("n"), py::arg("d"));
  m.def("hall_eulerian", &fc::HallEulerian, py::arg("n"), py::arg("d"));
  m.def("fix_count_mult", &fc::FixCountMult, py::arg("n"), py::arg("a"), py::arg("d"));
  m.def("fix_count_affine", &fc::FixCountAffine, py::arg("n"), py::arg("a"), py::arg("b"),
        py::arg("d"));
  m.def("burnside_m", &fc::BurnsideM, py::arg("n"), py::arg("d"));
  m.def("burnside_p", &fc::BurnsideP, py::arg("n"), py::arg("d"));
  m.def("prime_unlifted", &fc::PrimeUnlifted, py::arg("p"), py::arg("d"));
  m.def("prime_lifted", &fc::PrimeLifted, py::arg("p"), py::arg("d"));
  m.def("prime_real", &fc::PrimeReal, py::arg("p"), py::arg("d"));
  m.def("asymptotic_a", &fc::AsymptoticA, py::arg("n"), py::arg("d"));

  m.def("is_real", [](int n, const std::vector<int>& j) { return fc::IsReal(Subset(n, j)); },
        py::arg("n"), py::arg("j"));
  m.def("is_lifted", [](int n, const std::vector<int>& j) { return fc::IsLifted(Subset(n, j)); },
        py::arg("n"), py::arg("j"));
  m.def("verify_tight",
        [](int n, const std::vector<int>& j) { return fc::VerifyTight(Subset(n, j)); },
        py::arg("n"), py::arg("j"));
  m.def("mult_canonical",
        [](int n, const std::vector<int>& j) {
          return fc::MultCanonical(Subset(n, j)).subset.elements();
        },
        py::arg("n"), py::arg("j"));
  m.def("affine_canonical",
        [](int n, const std::vector<int>& j) {
          return fc::AffineCanonical(Subset(n, j)).subset.elements();
        },
        py::arg("n"), py::arg("j"));
  m.def("mult_witness",
        [](int n, const std::vector<int>& j, const std::vector<int>& k) {
          return fc::FindMultWitness(Subset(n, j), Subset(n, k));
        },
        py::arg("n"), py::arg("j"), py::arg("k"));
  m.def("unitary_witness",
        [](int n, const std::vector<int>& j, const std::vector<int>& k,
           std::uint64_t budget) -> std::optional<std::vector<int>> {
          auto witness = fc::UnitarilyEquivalent(Subset(n, j), Subset(n, k), {budget});
          if (!witness) return std::nullopt;
          return witness->permutation;
        },
        py::arg("n"), py::arg("j"), py::arg("k"), py::arg("budget") = fc::kDefaultNodeBudget,
        "Reindexing sigma as a list (sigma[x] for x in Z_n), or None.");
  m.def("is_exceptional",
        [](int n, const std::vector<int>& j, const std::vector<int>& k, std::uint64_t budget) {
          return fc::IsExceptionalPair(Subset(n, j), Subset(n, k), {budget});
        },
        py::arg("n"), py::arg("j"), py::arg("k"), py::arg("budget") = fc::kDefaultNodeBudget);

  py::class_<fc::CensusReport>(m, "CensusReport")
      .def_readonly("n", &fc::CensusReport::n)
      .def_readonly("d", &fc::CensusReport::d)
      .def_readonly("m", &fc::CensusReport::m)
      .def_readonly("h_min", &fc::CensusReport::h_min)
      .def_readonly("h_max", &fc::CensusReport::h_max)
      .def_readonly("a", &fc::CensusReport::a)
      .def_property_readonly("h_exact", &fc::CensusReport::h_exact)
      .def_property_readonly("classes",
                             [](const fc::CensusReport& r) {
                               py::list out;
                               for (const auto& c : r.classes) out.append(ClassDict(c));
                               return out;
                             })
      .def_property_readonly("exceptional_pairs",
                             [](const fc::CensusReport& r) {
                               py::list out;
                               for (const auto& p : r.exceptional_pairs) {
                                 out.append(py::make_tuple(p.first.elements(),
                                                           p.second.elements(),
                                                           p.witness.CycleString()));
                               }
                               return out;
                             })
      .def_property_readonly("unresolved_pairs",
                             [](const fc::CensusReport& r) {
                               py::list out;
                               for (const auto& p : r.unresolved_pairs) {
                                 out.append(py::make_tuple(p.first.elements(),
                                                           p.second.elements()));
                               }
                               return out;
                             })
      .def("summary", &fc::CensusSummary)
      .def("to_json",
           [](const fc::CensusReport& r) { return fc::ExportCatalog(r, fc::CatalogFormat::kJson); })
      .def("to_csv",
           [](const fc::CensusReport& r) { return fc::ExportCatalog(r, fc::CatalogFormat::kCsv); })
      .def("__eq__", [](const fc::CensusReport& a, const fc::CensusReport& b) { return a == b; })
      .def("__repr__", [](const fc::CensusReport& r) {
        return "<CensusReport " + fc::CensusSummary(r) + ">";
      });

  m.def("run_census",
        [](int n, int d, std::uint64_t budget, int workers) {
          py::gil_scoped_release release;
          return fc::RunCensus(n, d, {budget, workers});
        },
        py::arg("n"), py::arg("d"), py::arg("budget") = fc::kDefaultNodeBudget,
        py::arg("workers") = 1);
  m.def("import_catalog", [](const std::string& text) { return fc::ImportCatalog(text); },
        py::arg("text"));

  m.def("verify",
        [](int max_n, int max_d) {
          fc::VerifyOptions options;
          options.max_n = max_n;
          options.max_d = max_d;
          fc::VerifyReport report;
          {
            py::gil_scoped_release release;
            report = fc::RunVerification(options);
          }
          py::list failures;
          for (const auto& check : report.checks) {
            if (!check.passed) failures.append(py::make_tuple(check.name, check.detail));
          }
          return py::make_tuple(report.checks.size(), failures);
        },
        py::arg("max_n") = 12, py::arg("max_d") = 3,
        "Returns (number of checks, [(name, detail) for each failure]).");
}
