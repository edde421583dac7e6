// Copyright 2026 The qamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qamp/complex_matrix.hpp"
#include "qamp/conjugator.hpp"
#include "qamp/encoder.hpp"
#include "qamp/errors.hpp"
#include "qamp/estimator.hpp"
#include "qamp/multiplier.hpp"
#include "qamp/registers.hpp"
#include "qamp/resources.hpp"
#include "qamp/version.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

using qamp::complex_t;
using qamp::ComplexMatrix;
using qamp::PreparedMatrix;
using CArray = py::array_t<complex_t, py::array::c_style | py::array::forcecast>;

ComplexMatrix from_array(const CArray &a) {
    if (a.ndim() != 2) {
        throw qamp::DimensionError("expected a 2-D array");
    }
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    auto view = a.unchecked<2>();
    qamp::ComplexRows data(rows, std::vector<complex_t>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            data[r][c] = view(r, c);
        }
    }
    const bool square_pow2 = rows == cols && rows >= 2 && (rows & (rows - 1)) == 0;
    if (!square_pow2) {
        return qamp::pad_to_square(data);
    }
    int n = 0;
    while ((std::size_t{1} << n) < rows) {
        ++n;
    }
    std::vector<complex_t> flat;
    flat.reserve(rows * cols);
    for (auto &row : data) {
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, std::move(flat));
}

CArray to_array(const ComplexMatrix &m) {
    const auto d = static_cast<py::ssize_t>(m.dim());
    CArray out({d, d});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

qamp::Manipulations manipulations(bool dagger_a, bool dagger_b, bool swap_order) {
    return {dagger_a, dagger_b, swap_order};
}

py::dict multiply(const PreparedMatrix &pm1, const PreparedMatrix &pm2, bool dagger_a,
                  bool dagger_b, bool swap_order, bool controlled) {
    const auto layout = qamp::layout_for(pm1.n(), controlled);
    const qamp::ProductResult r = qamp::run_pipeline(
        pm1, pm2, manipulations(dagger_a, dagger_b, swap_order), layout, {controlled});
    return py::dict("matrix_hat"_a = to_array(r.matrix_hat), "b_hat"_a = r.b_hat,
                    "matrix_recovered"_a = to_array(r.recovered()),
                    "b_recovered"_a = r.recovered_b(), "g_exact"_a = r.g_exact,
                    "branch_probability"_a = r.branch_probability,
                    "scale_back"_a = r.scale_back, "expected"_a = to_array(r.expected),
                    "oracle_error"_a = r.oracle_error, "b_error"_a = r.b_error,
                    "residual"_a = r.residual, "manipulations"_a = r.manipulations.label(),
                    "total_qubits"_a = layout.total_qubits());
}

py::dict estimate(const PreparedMatrix &pm1, const PreparedMatrix &pm2, std::uint64_t shots,
                  std::uint64_t seed, bool dagger_a, bool dagger_b, bool swap_order) {
    const qamp::GEstimate e = qamp::estimate_g(
        pm1, pm2, manipulations(dagger_a, dagger_b, swap_order), shots, seed);
    return py::dict("s1"_a = e.s1, "s1_tilde_exact"_a = e.s1_tilde_exact,
                    "s1_tilde_sampled"_a = e.s1_tilde_sampled, "g_exact"_a = e.g_exact,
                    "g_hat"_a = e.g_hat, "stderr"_a = e.stderr_g, "shots"_a = e.shots,
                    "seed"_a = e.seed, "k1_zero_count"_a = e.k1_zero_count,
                    "nominal_runs"_a = e.nominal_runs);
}

py::dict resources(int n, bool with_controls) {
    const qamp::ResourceReport r = qamp::resource_report(n, with_controls);
    py::list stages;
    for (const auto &s : r.stages) {
        stages.append(py::dict("name"_a = s.name, "gates"_a = s.gates, "depth"_a = s.depth));
    }
    return py::dict("n"_a = r.n, "with_controls"_a = r.with_controls, "qubits"_a = r.qubits,
                    "w3_controls"_a = r.w3_controls, "w3_toffolis"_a = r.w3_toffolis,
                    "stages"_a = stages, "core_depth"_a = r.core_depth,
                    "total_depth"_a = r.total_depth, "total_gates"_a = r.total_gates,
                    "depth_slope"_a = r.depth_slope, "depth_intercept"_a = r.depth_intercept);
}

py::dict layout(int n, bool with_controls) {
    const qamp::RegisterLayout l = qamp::layout_for(n, with_controls);
    py::dict out;
    for (qamp::Subsystem s : qamp::kAllSubsystems) {
        if (l.has(s)) {
            const qamp::Slice sl = l.slice(s);
            out[py::str(std::string(qamp::subsystem_name(s)))] =
                py::make_tuple(sl.first, sl.width);
        }
    }
    return out;
}

CArray conjugate(const PreparedMatrix &pm) {
    const auto block = qamp::EncodedBlock::standalone(pm.n());
    const auto d = qamp::decode(qamp::hermitian_conjugate(qamp::encode(pm), block), block);
    return to_array(d.matrix);
}

} // namespace

PYBIND11_MODULE(_qamp, m) {
    m.doc() = "Amplitude-encoded complex matrix multiplication on a statevector simulator";
    m.attr("__version__") = qamp::kVersion;

    auto base = py::register_exception<qamp::Error>(m, "QampError", PyExc_RuntimeError);
    py::register_exception<qamp::DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<qamp::ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<qamp::ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<qamp::FormatError>(m, "FormatError", base.ptr());
    py::register_exception<qamp::LayoutError>(m, "LayoutError", base.ptr());
    py::register_exception<qamp::MethodUndefinedError>(m, "MethodUndefinedError", base.ptr());
    py::register_exception<qamp::EstimateUnavailableError>(m, "EstimateUnavailableError",
                                                           base.ptr());

    py::class_<PreparedMatrix>(m, "PreparedMatrix")
        .def(py::init([](const CArray &scaled, complex_t b, double s_original, double c) {
                 return PreparedMatrix(from_array(scaled), b, s_original, c);
             }),
             "scaled"_a, "b"_a, "s_original"_a, "c"_a)
        .def_property_readonly("matrix", [](const PreparedMatrix &p) { return to_array(p.matrix()); })
        .def_property_readonly("b", &PreparedMatrix::b)
        .def_property_readonly("s_original", &PreparedMatrix::s_original)
        .def_property_readonly("c", &PreparedMatrix::c)
        .def_property_readonly("n", &PreparedMatrix::n)
        .def_property_readonly("scale", &PreparedMatrix::scale)
        .def("__repr__", [](const PreparedMatrix &p) {
            return "<PreparedMatrix n=" + std::to_string(p.n()) +
                   " c=" + std::to_string(p.c()) + ">";
        });

    m.def(
        "prepare",
        [](const CArray &a, double c, double b_phase) {
            return qamp::prepare(from_array(a), c, {b_phase});
        },
        "a"_a, "c"_a = qamp::kDefaultSlack, "b_phase"_a = 0.0,
        "Rescale a matrix (zero-padded to 2^n x 2^n) so it can be amplitude-encoded.");
    m.def("multiply", &multiply, "pm1"_a, "pm2"_a, py::kw_only(), "dagger_a"_a = false,
          "dagger_b"_a = false, "swap_order"_a = false, "controlled"_a = false,
          "Run the multiplication circuit and decode the product.");
    m.def("hermitian_conjugate", &conjugate, "pm"_a,
          "Conjugate transpose computed on the encoded state (prepared scale).");
    m.def("estimate_g", &estimate, "pm1"_a, "pm2"_a, "shots"_a = 100000, "seed"_a = 0,
          py::kw_only(), "dagger_a"_a = false, "dagger_b"_a = false, "swap_order"_a = false);
    m.def("resource_report", &resources, "n"_a, "with_controls"_a = false);
    m.def("layout", &layout, "n"_a, "with_controls"_a = false,
          "Subsystem name -> (first qubit, width).");
    m.def(
        "matmul_oracle",
        [](const CArray &a, const CArray &b) {
            return to_array(qamp::matmul_oracle(from_array(a), from_array(b)));
        },
        "a"_a, "b"_a);
    m.def(
        "dagger_oracle", [](const CArray &a) { return to_array(qamp::dagger_oracle(from_array(a))); },
        "a"_a);
}
