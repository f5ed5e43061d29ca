// Copyright 2026 The mstent Authors
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
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mstent/bounds.hpp"
#include "mstent/config.hpp"
#include "mstent/entropy.hpp"
#include "mstent/errors.hpp"
#include "mstent/mc.hpp"
#include "mstent/specfn.hpp"
#include "mstent/tables.hpp"

namespace py = pybind11;
using namespace mstent;

namespace {

SkewTParams make_params(const Vector& mu, const Matrix& scale, const Vector& delta,
                        double dof) {
  return SkewTParams(mu, SpdMatrix(scale), delta, dof);
}

McOptions mc_opts(std::size_t n, std::uint64_t seed, unsigned threads) {
  McOptions o;
  o.n = n;
  o.seed = seed;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_mstent, m) {
  m.doc() = "Entropies of multivariate skew-t distributions and their mixtures";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("log_gamma", &log_gamma);
  m.def("digamma", &digamma);
  m.def("reg_inc_beta", &reg_inc_beta);
  m.def("student_t_cdf", &student_t_cdf);
  m.def("student_t_logpdf", &student_t_logpdf);

  py::class_<FormulaReadings>(m, "FormulaReadings")
      .def_static("exact", &FormulaReadings::exact)
      .def_static("tables", &FormulaReadings::tables);

  py::class_<SkewTParams>(m, "SkewT")
      .def(py::init(&make_params), py::arg("mu"), py::arg("scale"), py::arg("delta"),
           py::arg("dof"))
      .def_property_readonly("dim", &SkewTParams::dim)
      .def_property_readonly("mu", [](const SkewTParams& p) { return p.mu; })
      .def_property_readonly("scale", [](const SkewTParams& p) { return p.scale.matrix(); })
      .def_property_readonly("delta", [](const SkewTParams& p) { return p.delta; })
      .def_property_readonly("dof", [](const SkewTParams& p) { return p.dof; })
      .def("logpdf", [](const SkewTParams& p, const Vector& x) { return skewt_logpdf(p, x); })
      .def("mean", &skewt_mean)
      .def("cov", &skewt_cov)
      .def("sample", &sample_skewt, py::arg("n"), py::arg("seed") = kDefaultSeed,
           py::arg("threads") = 0u)
      .def("shannon",
           [](const SkewTParams& p, const FormulaReadings& r) {
             return skewt_shannon(p, {}, r);
           },
           py::arg("readings") = FormulaReadings::exact())
      .def("renyi",
           [](const SkewTParams& p, double alpha, const FormulaReadings& r) {
             return skewt_renyi(p, alpha, {}, r);
           },
           py::arg("alpha"), py::arg("readings") = FormulaReadings::exact());

  py::class_<MixtureParams>(m, "Mixture")
      .def(py::init<std::vector<SkewTParams>, std::vector<double>>(), py::arg("components"),
           py::arg("weights"))
      .def_property_readonly("dim", &MixtureParams::dim)
      .def_property_readonly("size", &MixtureParams::size)
      .def_readonly("weights", &MixtureParams::weights)
      .def("logpdf", [](const MixtureParams& mx, const Vector& x) { return mixture_logpdf(mx, x); })
      .def("sample",
           [](const MixtureParams& mx, std::size_t n, std::uint64_t seed, unsigned threads) {
             return sample_mixture(mx, n, seed, threads);
           },
           py::arg("n"), py::arg("seed") = kDefaultSeed, py::arg("threads") = 0u);

  py::class_<BoundsReport>(m, "BoundsReport")
      .def_readonly("lower", &BoundsReport::lower)
      .def_readonly("upper", &BoundsReport::upper)
      .def_readonly("approx", &BoundsReport::approx)
      .def_readonly("half_width", &BoundsReport::half_width)
      .def_readonly("per_component", &BoundsReport::per_component)
      .def_readonly("alpha", &BoundsReport::alpha)
      .def_readonly("crossed", &BoundsReport::crossed);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("value", &Estimate::value)
      .def_readonly("std_error", &Estimate::std_error)
      .def_readonly("n", &Estimate::n)
      .def_readonly("seed", &Estimate::seed)
      .def_property_readonly("method", [](const Estimate& e) { return to_string(e.method); })
      .def_readonly("ess", &Estimate::ess)
      .def_readonly("low_ess", &Estimate::low_ess);

  m.def("shannon_bounds",
        [](const MixtureParams& mx, const FormulaReadings& r) { return shannon_bounds(mx, {}, r); },
        py::arg("mixture"), py::arg("readings") = FormulaReadings::exact());
  m.def("renyi_bounds",
        [](const MixtureParams& mx, int alpha, const FormulaReadings& r) {
          return renyi_bounds(mx, alpha, {}, r);
        },
        py::arg("mixture"), py::arg("alpha"), py::arg("readings") = FormulaReadings::exact());
  m.def("renyi_large_alpha_approx",
        [](const MixtureParams& mx, int alpha) { return renyi_large_alpha_approx(mx, alpha); },
        py::arg("mixture"), py::arg("alpha"));

  m.def("mc_shannon",
        [](const MixtureParams& mx, std::size_t n, std::uint64_t seed, unsigned threads) {
          return mc_shannon(mixture_law(mx), mc_opts(n, seed, threads));
        },
        py::arg("mixture"), py::arg("n") = kDefaultSamples, py::arg("seed") = kDefaultSeed,
        py::arg("threads") = 0u);
  m.def("mc_renyi",
        [](const MixtureParams& mx, double alpha, std::size_t n, std::uint64_t seed,
           unsigned threads) { return mc_renyi(mixture_law(mx), alpha, mc_opts(n, seed, threads)); },
        py::arg("mixture"), py::arg("alpha"), py::arg("n") = kDefaultSamples,
        py::arg("seed") = kDefaultSeed, py::arg("threads") = 0u);
  m.def("is_renyi",
        [](const MixtureParams& mx, double alpha, std::size_t n, std::uint64_t seed,
           unsigned threads) {
          return is_renyi(mixture_law(mx), default_proposal(mx), alpha, mc_opts(n, seed, threads));
        },
        py::arg("mixture"), py::arg("alpha"), py::arg("n") = kDefaultSamples,
        py::arg("seed") = kDefaultSeed, py::arg("threads") = 0u);

  m.def("example1", &example1, py::arg("case_id"), py::arg("v"));
  m.def("example2", &example2, py::arg("d"), py::arg("m"));
  m.def("parse_config", [](const std::string& text) { return parse_config(text).mixture; });
}
