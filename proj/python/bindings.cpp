// Copyright 2026 The latfree Authors
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

#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "latfree/cli.hpp"
#include "latfree/lattice.hpp"
#include "latfree/render.hpp"

namespace py = pybind11;

namespace {

using latfree::BigInt;
using latfree::LatticePoint;
using latfree::UnimodularSet;
using Pair = std::pair<long, long>;

LatticePoint to_point(const Pair& p) { return latfree::point(p.first, p.second); }

UnimodularSet to_set(const Pair& z, const std::pair<Pair, Pair>& u) {
  return UnimodularSet(to_point(z), latfree::UniMatrix(to_point(u.first), to_point(u.second)));
}

py::int_ to_py(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.get_str())); }

std::tuple<int, std::string, std::string> solve_json(const std::string& problem,
                                                     std::optional<std::string> mode,
                                                     std::optional<double> tau, int max_iterations,
                                                     bool literal_case4) {
  latfree::cli::RunConfig config;
  config.mode = std::move(mode);
  config.tau = tau;
  config.max_iterations = max_iterations;
  config.literal_case4 = literal_case4;
  config.log = latfree::cli::LogLevel::kQuiet;
  latfree::cli::SolveOutcome out;
  {
    py::gil_scoped_release release;
    out = latfree::cli::solve_document(latfree::Json::parse(problem), config);
  }
  return {out.exit_code, out.document.is_null() ? "" : out.document.dump(), out.error};
}

std::tuple<int, std::string, std::string> verify_json(const std::string& problem,
                                                      const std::string& certificate,
                                                      int box_radius) {
  latfree::cli::VerifyOutcome out;
  {
    py::gil_scoped_release release;
    out = latfree::cli::verify_document(latfree::Json::parse(problem),
                                        latfree::Json::parse(certificate), box_radius);
  }
  return {out.exit_code, out.report.dump(), out.error};
}

std::string emit(const std::string& certificate, const std::string& format) {
  const auto cert = latfree::parse_certificate(latfree::Json::parse(certificate));
  if (format == "csv") return latfree::render_csv(cert);
  if (format == "svg") return latfree::render_svg(cert);
  throw py::value_error("format must be 'csv' or 'svg'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Convex minimization over Z^2 by unimodular flips";

  static py::exception<latfree::Error> error(m, "LatfreeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const latfree::Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const latfree::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("solve_json", &solve_json, py::arg("problem"), py::arg("mode") = py::none(),
        py::arg("tau") = py::none(), py::arg("max_iterations") = 10000,
        py::arg("literal_case4") = false,
        "Returns (exit_code, certificate_json, error_message).");
  m.def("verify_json", &verify_json, py::arg("problem"), py::arg("certificate"),
        py::arg("box_radius") = 50, "Returns (exit_code, report_json, error_message).");
  m.def("emit", &emit, py::arg("certificate"), py::arg("format"));

  m.def(
      "members",
      [](const Pair& z, const std::pair<Pair, Pair>& u) {
        py::list out;
        for (const auto& p : to_set(z, u).members()) out.append(py::make_tuple(to_py(p.x), to_py(p.y)));
        return out;
      },
      py::arg("z"), py::arg("U"), "The four members z, z+u1, z+u2, z+u1+u2.");
  m.def(
      "r_metric",
      [](const Pair& z, const std::pair<Pair, Pair>& u, const Pair& x) {
        return to_py(latfree::r_metric(to_set(z, u), to_point(x)));
      },
      py::arg("z"), py::arg("U"), py::arg("x"));
  m.def(
      "normalize_rational",
      [](const std::string& text) { return latfree::Rational::parse(text).to_string(); },
      py::arg("text"));

  m.attr("EXIT_OK") = static_cast<int>(latfree::cli::kExitOk);
  m.attr("EXIT_VERIFY_FAILED") = static_cast<int>(latfree::cli::kExitVerifyFailed);
  m.attr("EXIT_BUDGET_EXHAUSTED") = static_cast<int>(latfree::cli::kExitBudgetExhausted);
  m.attr("EXIT_HASH_MISMATCH") = static_cast<int>(latfree::cli::kExitHashMismatch);
  m.attr("__version__") = "0.1.0";
}
