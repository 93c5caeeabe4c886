// Copyright 2026 The qwalk Authors
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

#include <optional>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwalk/analysis.hpp"
#include "qwalk/circuit.hpp"
#include "qwalk/compiler.hpp"
#include "qwalk/error.hpp"
#include "qwalk/gate_sim.hpp"
#include "qwalk/graphs.hpp"
#include "qwalk/walk.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

FamilySpec makeSpec(const std::string &family, unsigned n, std::optional<unsigned> m) {
    switch (FamilySpec::parseFamily(family)) {
    case Family::Hypercube:
        return FamilySpec::hypercube(n);
    case Family::CompleteSelfLoop:
        return FamilySpec::complete(n);
    case Family::TwistedToroid:
        if (!m) {
            throw InvalidArgument("twisted_toroid needs m");
        }
        return FamilySpec::twistedToroid(n, *m);
    }
    throw InvalidArgument("unknown family");
}

py::dict peakDict(const PeakReport &p) {
    py::dict d;
    d["t_star"] = p.tStar;
    d["p_star"] = p.pStar;
    d["period"] = p.period ? py::cast(*p.period) : py::none();
    d["baseline"] = p.baseline;
    d["global_max_step"] = p.globalMaxStep;
    d["global_max_probability"] = p.globalMaxProbability;
    return d;
}

py::dict fitDict(const ScalingFit &f) {
    py::dict d;
    d["c"] = f.c;
    d["alpha"] = f.alpha;
    d["r2"] = f.r2;
    return d;
}

std::vector<FamilySpec> specsFor(const std::string &family, const std::vector<unsigned> &sizes) {
    std::vector<FamilySpec> out;
    for (unsigned n : sizes) {
        out.push_back(makeSpec(family, n, n));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coined quantum-walk search: structured simulation, step circuits, scans.";

    auto base = py::register_exception<Error>(m, "QwalkError", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", base.ptr());
    py::register_exception<NotCompilable>(m, "NotCompilable", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<FamilySpec>(m, "FamilySpec")
        .def(py::init(&makeSpec), py::arg("family"), py::arg("n"), py::arg("m") = py::none())
        .def_property_readonly("family", &FamilySpec::familyName)
        .def_property_readonly("n", &FamilySpec::n)
        .def_property_readonly("m", &FamilySpec::m)
        .def_property_readonly("node_count", &FamilySpec::nodeCount)
        .def_property_readonly("degree", &FamilySpec::degree)
        .def("__eq__", [](const FamilySpec &a, const FamilySpec &b) { return a == b; })
        .def("__hash__", [](const FamilySpec &s) { return py::hash(py::str(s.str())); })
        .def("__repr__", [](const FamilySpec &s) { return "FamilySpec(" + s.str() + ")"; });

    m.def(
        "neighbor",
        [](const FamilySpec &spec, NodeId v, SubnodeId a) {
            const Site s = neighbor(spec, v, a);
            return py::make_tuple(s.node, s.subnode);
        },
        py::arg("spec"), py::arg("node"), py::arg("subnode"));
    m.def("encode_node", &encodeNode, py::arg("spec"), py::arg("node"));
    m.def("decode_node", &decodeNode, py::arg("spec"), py::arg("bits"));
    m.def("default_marked_node", &defaultMarkedNode, py::arg("spec"));

    m.def(
        "step_matrix",
        [](const FamilySpec &spec, std::optional<NodeId> marked) {
            return stepMatrix(spec, SearchConfig{marked});
        },
        py::arg("spec"), py::arg("marked") = py::none(),
        "Dense U = S C, index node * degree + subnode.");

    m.def(
        "success_curve",
        [](const FamilySpec &spec, NodeId marked, std::size_t tMax, std::uint64_t maxAmps) {
            py::gil_scoped_release release;
            return successCurve(spec, marked, tMax, maxAmps).probabilities;
        },
        py::arg("spec"), py::arg("marked"), py::arg("t_max"),
        py::arg("max_amplitudes") = kDefaultMaxAmplitudes);

    m.def(
        "find_peak",
        [](std::vector<double> probabilities, double baseline) {
            return peakDict(findPeak(Curve::fromValues(std::move(probabilities), baseline)));
        },
        py::arg("probabilities"), py::arg("baseline") = 0.0);

    m.def(
        "fit_power_law",
        [](const std::vector<std::pair<double, double>> &points) {
            std::vector<FitPoint> pts;
            for (const auto &[x, y] : points) {
                pts.push_back({x, y});
            }
            return fitDict(fitPowerLaw(std::move(pts)));
        },
        py::arg("points"));

    m.def(
        "scaling_scan",
        [](const std::string &family, const std::vector<unsigned> &sizes) {
            const auto specs = specsFor(family, sizes);
            ScalingScan scan;
            {
                py::gil_scoped_release release;
                scan = scalingScan(specs);
            }
            py::list rows;
            for (const auto &r : scan.rows) {
                py::dict row = peakDict(r.peak);
                row["N"] = r.nodeCount;
                rows.append(row);
            }
            py::dict out;
            out["rows"] = rows;
            out["fit"] = fitDict(scan.fit);
            return out;
        },
        py::arg("family"), py::arg("sizes"),
        "Steps to peak over n values (the toroid uses n = m).");

    m.def(
        "gate_count_scan",
        [](const std::string &family, const std::vector<unsigned> &sizes) {
            const GateCountScan scan = gateCountScan(specsFor(family, sizes));
            py::list rows;
            for (const auto &r : scan.rows) {
                rows.append(py::make_tuple(r.nodeCount, r.twoQubitGates));
            }
            py::dict out;
            out["rows"] = rows;
            if (scan.rows.size() >= 3) {
                out["fit"] = fitDict(scan.fit);
            }
            return out;
        },
        py::arg("family"), py::arg("sizes"));

    m.def("is_compilable", &isCompilable, py::arg("spec"));
    m.def(
        "compile_step",
        [](const FamilySpec &spec, NodeId marked, bool lowered) {
            const Circuit c = buildStepCircuit(spec, marked);
            return serialize(lowered ? lower(c) : c);
        },
        py::arg("spec"), py::arg("marked"), py::arg("lowered") = true,
        "Step circuit in the text format.");
    m.def(
        "two_qubit_gate_count",
        [](const std::string &text) { return countTwoQubitGates(parse(text)); },
        py::arg("circuit_text"));
    m.def(
        "circuit_unitary",
        [](const std::string &text) { return toUnitary(parse(text)); },
        py::arg("circuit_text"));

    m.def(
        "verify_step",
        [](const FamilySpec &spec, NodeId marked, std::size_t steps,
           std::optional<std::string> circuitText) {
            const Circuit c = circuitText ? lower(parse(*circuitText))
                                          : lower(buildStepCircuit(spec, marked));
            py::dict out;
            if (c.qubitCount() <= kDefaultUnitaryQubitCap) {
                const UnitaryCheck u = compareStepUnitary(c, spec, marked);
                out["unitary_max_deviation"] = u.maxDeviation;
                out["unitary_ancilla_leak"] = u.ancillaLeak;
            }
            const TrajectoryCheck t = compareTrajectory(c, spec, marked, steps);
            out["trajectory_max_amplitude_deviation"] = t.maxAmplitudeDeviation;
            out["trajectory_max_probability_deviation"] = t.maxProbabilityDeviation;
            out["trajectory_max_ancilla_leak"] = t.maxLeak;
            return out;
        },
        py::arg("spec"), py::arg("marked"), py::arg("steps") = 25,
        py::arg("circuit_text") = py::none());
}
