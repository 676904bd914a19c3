// Copyright 2026 The gaussyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "gaussyn/error.hpp"
#include "gaussyn/io.hpp"
#include "gaussyn/mainlemma.hpp"
#include "gaussyn/relations.hpp"
#include "gaussyn/synth.hpp"

namespace py = pybind11;
using namespace gaussyn;

namespace {

RelationSet relation_set(const std::string& name) {
  if (name == "core") return RelationSet::Core;
  if (name == "derived") return RelationSet::Derived;
  throw py::value_error("set must be 'core' or 'derived'");
}

Integer to_integer(const py::int_& v) { return Integer(py::str(py::handle(v)).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact synthesis and relation checking for Gaussian dyadic unitaries";

  py::register_exception<Error>(m, "GaussynError", PyExc_ValueError);

  m.def("lde", [](const py::int_& re, const py::int_& im, unsigned k) {
    return lde(DyadicGauss(GaussInt(to_integer(re), to_integer(im)), k));
  }, py::arg("re"), py::arg("im"), py::arg("k"), "Least denominator exponent of (re + im i) / (1+i)^k.");

  m.def("normalize_word", [](const std::string& w, std::size_t n) { return print_word(parse_word(w, n)); },
        py::arg("word"), py::arg("n"));
  m.def("eval_word", [](const std::string& w, std::size_t n) {
    return matrix_to_json(eval_word(parse_word(w, n), n)).dump();
  }, py::arg("word"), py::arg("n"), "Matrix of a word as a JSON document.");
  m.def("normal_form", [](const std::string& w, std::size_t n) {
    return print_word(normal_form(parse_word(w, n), n));
  }, py::arg("word"), py::arg("n"));
  m.def("equivalent", [](const std::string& w, const std::string& v, std::size_t n) {
    return equivalent(parse_word(w, n), parse_word(v, n), n);
  }, py::arg("w"), py::arg("v"), py::arg("n"));
  m.def("synthesize", [](const std::string& doc) { return print_word(normal_word(parse_matrix(doc))); },
        py::arg("matrix_json"), "Normal word W with eval(W) U = I for a matrix JSON document.");
  m.def("random_word", [](std::size_t n, std::size_t length, std::uint64_t seed) {
    return print_word(random_word(n, length, seed));
  }, py::arg("n"), py::arg("length"), py::arg("seed"));

  m.def("verify_relations", [](std::size_t n, const std::string& set, unsigned threads) {
    SoundnessReport r;
    {
      py::gil_scoped_release release;
      r = verify_soundness(n, relation_set(set), threads);
    }
    py::dict out;
    out["checked"] = r.checked;
    out["failed"] = r.failed;
    out["failures"] = r.failures;
    return out;
  }, py::arg("n"), py::arg("set") = "core", py::arg("threads") = 0);

  m.def("main_lemma", [](std::size_t n, std::size_t samples, std::uint64_t seed, unsigned threads) {
    MainLemmaReport r;
    {
      py::gil_scoped_release release;
      r = run_main_lemma(n, samples, seed, threads);
    }
    py::dict coverage;
    for (const CaseId id : all_cases()) {
      const auto it = r.coverage.find(id);
      coverage[py::str(std::string(to_string(id)))] = it == r.coverage.end() ? 0 : it->second;
    }
    py::list unwitnessed;
    for (const CaseId id : r.unwitnessed()) unwitnessed.append(std::string(to_string(id)));
    py::dict out;
    out["checked"] = r.checked;
    out["failed"] = r.failed;
    out["failures"] = r.failures;
    out["coverage"] = coverage;
    out["unwitnessed"] = unwitnessed;
    return out;
  }, py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0);
}
