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

#include "qwalk/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/analysis.hpp"
#include "qwalk/circuit.hpp"
#include "qwalk/compiler.hpp"
#include "qwalk/error.hpp"
#include "qwalk/gate_sim.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void writeFile(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot open '" + path + "' for writing");
    }
    f << content;
    if (!f) {
        throw InvalidArgument("failed writing '" + path + "'");
    }
}

std::string readFile(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::uint64_t amplitudeCap(const RunConfig &cfg) {
    return cfg.maxAmplitudes ? cfg.maxAmplitudes : kDefaultMaxAmplitudes;
}

const FamilySpec &requireSpec(const RunConfig &cfg) {
    if (!cfg.spec) {
        throw InvalidArgument("a graph is required: --family with --n (and --m), or --spec");
    }
    return *cfg.spec;
}

NodeId markedFor(const RunConfig &cfg, const FamilySpec &spec) {
    const NodeId marked = cfg.marked.value_or(defaultMarkedNode(spec));
    if (marked >= spec.nodeCount()) {
        throw InvalidArgument("marked node " + std::to_string(marked) + " out of range for " +
                              spec.str());
    }
    return marked;
}

Json specJson(const FamilySpec &spec) {
    Json j;
    j["family"] = spec.familyName();
    j["n"] = spec.n();
    if (spec.family() == Family::TwistedToroid) {
        j["m"] = spec.m();
    }
    return j;
}

FamilySpec specFromJson(const Json &j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("n")) {
        throw InvalidArgument("spec JSON needs \"family\" and \"n\"");
    }
    const Family family = FamilySpec::parseFamily(j.at("family").get<std::string>());
    const auto n = j.at("n").get<unsigned>();
    switch (family) {
    case Family::Hypercube:
        return FamilySpec::hypercube(n);
    case Family::CompleteSelfLoop:
        return FamilySpec::complete(n);
    case Family::TwistedToroid:
        if (!j.contains("m")) {
            throw InvalidArgument("twisted_toroid spec needs \"m\"");
        }
        return FamilySpec::twistedToroid(n, j.at("m").get<unsigned>());
    }
    throw InvalidArgument("unknown family");
}

FamilySpec specFor(Family family, unsigned n, std::optional<unsigned> m) {
    switch (family) {
    case Family::Hypercube:
        return FamilySpec::hypercube(n);
    case Family::CompleteSelfLoop:
        return FamilySpec::complete(n);
    case Family::TwistedToroid:
        return FamilySpec::twistedToroid(n, m.value_or(n));
    }
    throw InvalidArgument("unknown family");
}

Json fitJson(const ScalingFit &fit, const char *model) {
    Json j;
    j["model"] = model;
    j["c"] = fit.c;
    j["alpha"] = fit.alpha;
    j["r2"] = fit.r2;
    return j;
}

Json peakJson(const PeakReport &p) {
    Json j;
    j["t_star"] = p.tStar;
    j["p_star"] = p.pStar;
    j["period"] = p.period ? Json(*p.period) : Json(nullptr);
    j["baseline"] = p.baseline;
    j["global_max_step"] = p.globalMaxStep;
    j["global_max_probability"] = p.globalMaxProbability;
    return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace

std::vector<unsigned> defaultScanSizes(Family family, ScanMetric metric) {
    switch (family) {
    case Family::Hypercube:
        return metric == ScanMetric::Gates ? std::vector<unsigned>{2, 4, 8, 16}
                                           : std::vector<unsigned>{4, 5, 6, 7, 8};
    case Family::CompleteSelfLoop:
        return {2, 3, 4, 5, 6, 7, 8};
    case Family::TwistedToroid:
        return {2, 3, 4, 5, 6};
    }
    return {};
}

int cmdSimulate(const RunConfig &cfg, std::ostream &out) {
    const FamilySpec &spec = requireSpec(cfg);
    const NodeId marked = markedFor(cfg, spec);
    const std::size_t tMax = cfg.tMax.value_or(defaultWindow(spec.nodeCount()));
    const Curve curve = successCurve(spec, marked, tMax, amplitudeCap(cfg));
    const PeakReport peak = findPeak(curve);

    std::ostringstream csv;
    csv << "step,probability\n";
    for (std::size_t t = 0; t < curve.size(); ++t) {
        csv << t << ',' << num(curve.probabilities[t]) << '\n';
    }
    Json summary;
    summary["spec"] = specJson(spec);
    summary["marked"] = marked;
    summary["t_max"] = tMax;
    summary["peak"] = peakJson(peak);

    if (!cfg.outPrefix.empty()) {
        writeFile(cfg.outPrefix + ".csv", csv.str());
        writeFile(cfg.outPrefix + ".json", dump(summary));
        out << dump(summary);
    } else if (cfg.format == OutputFormat::Json) {
        Json all = summary;
        all["probabilities"] = curve.probabilities;
        out << dump(all);
    } else {
        out << csv.str();
    }
    return kOk;
}

int cmdCompile(const RunConfig &cfg, std::ostream &out) {
    const FamilySpec &spec = requireSpec(cfg);
    if (!isCompilable(spec)) {
        throw NotCompilable(spec.str() + " has no step circuit (hypercube needs n a power of two, n >= 2)");
    }
    const NodeId marked = markedFor(cfg, spec);
    const Circuit composite = buildStepCircuit(spec, marked);
    const Circuit lowered = lower(composite);
    const std::string text = serialize(lowered);

    Json manifest;
    manifest["spec"] = specJson(spec);
    manifest["marked"] = marked;
    Json regs = Json::array();
    for (const auto &r : lowered.layout().registers()) {
        regs.push_back({{"name", r.name}, {"offset", r.offset}, {"width", r.width}});
    }
    manifest["registers"] = regs;
    manifest["qubits"] = lowered.qubitCount();
    manifest["ancilla_count"] = lowered.layout().ancillaQubits().size();
    manifest["composite_gate_count"] = composite.size();
    manifest["lowered_gate_count"] = lowered.size();
    manifest["lowered_two_qubit_gates"] = countTwoQubitGates(lowered);

    if (!cfg.outPrefix.empty()) {
        manifest["circuit_file"] = cfg.outPrefix + ".qc";
        writeFile(cfg.outPrefix + ".qc", text);
        writeFile(cfg.outPrefix + ".json", dump(manifest));
        out << dump(manifest);
    } else if (cfg.format == OutputFormat::Json) {
        out << dump(manifest);
    } else {
        out << text;
    }
    return kOk;
}

int cmdVerify(const RunConfig &cfg, std::ostream &out) {
    const FamilySpec &spec = requireSpec(cfg);
    const NodeId marked = markedFor(cfg, spec);
    Circuit circuit;
    if (!cfg.circuitFile.empty()) {
        circuit = parse(readFile(cfg.circuitFile));
        if (circuit.level() == CircuitLevel::Composite) {
            circuit = lower(circuit);
        }
    } else {
        if (!isCompilable(spec)) {
            throw NotCompilable(spec.str() + " has no step circuit");
        }
        circuit = lower(buildStepCircuit(spec, marked));
    }
    if (circuit.qubitCount() > kMaxSimulatedQubits) {
        throw SizeCapExceeded("circuit has " + std::to_string(circuit.qubitCount()) +
                              " qubits; the gate-level simulator stops at " +
                              std::to_string(kMaxSimulatedQubits));
    }

    Json report;
    report["spec"] = specJson(spec);
    report["marked"] = marked;
    report["qubits"] = circuit.qubitCount();
    report["tolerance"] = cfg.tolerance;
    double worst = 0.0;
    double leak = 0.0;
    if (circuit.qubitCount() <= kDefaultUnitaryQubitCap &&
        spec.nodeCount() * spec.degree() <= kDefaultMaxDenseDim) {
        const UnitaryCheck u = compareStepUnitary(circuit, spec, marked);
        report["unitary_max_deviation"] = u.maxDeviation;
        report["unitary_ancilla_leak"] = u.ancillaLeak;
        worst = std::max(worst, u.maxDeviation);
        leak = std::max(leak, u.ancillaLeak);
    } else {
        report["unitary_max_deviation"] = nullptr;
    }
    const TrajectoryCheck t = compareTrajectory(circuit, spec, marked, cfg.steps);
    report["steps"] = t.steps;
    report["trajectory_max_amplitude_deviation"] = t.maxAmplitudeDeviation;
    report["trajectory_max_probability_deviation"] = t.maxProbabilityDeviation;
    report["trajectory_max_ancilla_leak"] = t.maxLeak;
    worst = std::max({worst, t.maxAmplitudeDeviation, t.maxProbabilityDeviation});
    leak = std::max(leak, t.maxLeak);
    report["max_deviation"] = std::max(worst, leak);
    const bool ok = worst <= cfg.tolerance && leak <= cfg.tolerance;
    report["ok"] = ok;

    if (!cfg.outPrefix.empty()) {
        writeFile(cfg.outPrefix + ".json", dump(report));
    }
    out << dump(report);
    return ok ? kOk : kVerificationFailed;
}

int cmdScan(const RunConfig &cfg, std::ostream &out) {
    std::vector<FamilySpec> sizes;
    if (cfg.spec && !cfg.family) {
        throw InvalidArgument("scan takes --family and --sizes, not a single spec");
    }
    if (!cfg.family) {
        throw InvalidArgument("scan needs --family");
    }
    if (cfg.marked) {
        throw InvalidArgument("scan fixes the marked node at floor(N/3); drop --marked");
    }
    const auto ns = cfg.sizes.empty() ? defaultScanSizes(*cfg.family, cfg.metric) : cfg.sizes;
    for (unsigned n : ns) {
        sizes.push_back(specFor(*cfg.family, n, std::nullopt));
    }
    if (sizes.size() < 3) {
        throw InvalidArgument("scan needs at least 3 sizes");
    }

    std::ostringstream csv;
    Json summary;
    summary["family"] = sizes.front().familyName();
    Json rows = Json::array();
    if (cfg.metric == ScanMetric::Steps) {
        const double scale = cfg.windowScale;
        const ScalingScan scan = scalingScan(
            sizes,
            [scale](std::uint64_t nodes) {
                return static_cast<std::size_t>(std::ceil(scale * std::sqrt(static_cast<double>(nodes))));
            },
            amplitudeCap(cfg));
        csv << "N,t_star,p_star,period\n";
        for (const auto &r : scan.rows) {
            csv << r.nodeCount << ',' << r.peak.tStar << ',' << num(r.peak.pStar) << ','
                << (r.peak.period ? num(*r.peak.period) : std::string()) << '\n';
            Json row;
            row["spec"] = specJson(r.spec);
            row["N"] = r.nodeCount;
            row["marked"] = defaultMarkedNode(r.spec);
            row["peak"] = peakJson(r.peak);
            rows.push_back(row);
        }
        summary["metric"] = "steps";
        summary["fit"] = fitJson(scan.fit, "c*N^alpha");
    } else {
        const GateCountScan scan = gateCountScan(sizes);
        csv << "N,two_qubit_gates\n";
        for (const auto &r : scan.rows) {
            csv << r.nodeCount << ',' << r.twoQubitGates << '\n';
            Json row;
            row["spec"] = specJson(r.spec);
            row["N"] = r.nodeCount;
            row["two_qubit_gates"] = r.twoQubitGates;
            rows.push_back(row);
        }
        summary["metric"] = "gates";
        summary["fit"] = fitJson(scan.fit, "c*log2(N)^alpha");
    }
    summary["rows"] = rows;

    if (!cfg.outPrefix.empty()) {
        writeFile(cfg.outPrefix + ".csv", csv.str());
        writeFile(cfg.outPrefix + ".json", dump(summary));
        out << dump(summary["fit"]);
    } else if (cfg.format == OutputFormat::Json) {
        out << dump(summary);
    } else {
        out << csv.str();
    }
    return kOk;
}

namespace {

struct SpecOptions {
    std::string family;
    std::optional<unsigned> n;
    std::optional<unsigned> m;
    std::string specJson;
    std::string format = "csv";
    std::string metric = "steps";
};

void addSpecOptions(CLI::App &app, SpecOptions &s, RunConfig &cfg) {
    app.add_option("--family", s.family, "hypercube, complete or twisted_toroid");
    app.add_option("--n", s.n, "dimension / exponent");
    app.add_option("--m", s.m, "second toroid exponent");
    app.add_option("--spec", s.specJson, R"(graph as JSON, e.g. {"family":"hypercube","n":5})");
    app.add_option("--marked", cfg.marked, "marked node (default floor(N/3))");
    app.add_option("--out", cfg.outPrefix, "write PREFIX.* files instead of stdout");
    app.add_option("--format", s.format, "stdout format")->check(CLI::IsMember({"csv", "json"}));
}

void resolveSpec(const SpecOptions &s, RunConfig &cfg, bool single) {
    cfg.format = s.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    cfg.metric = s.metric == "gates" ? ScanMetric::Gates : ScanMetric::Steps;
    if (!s.specJson.empty()) {
        if (!s.family.empty() || s.n || s.m) {
            throw InvalidArgument("--spec cannot be combined with --family/--n/--m");
        }
        Json j;
        try {
            j = Json::parse(s.specJson);
        } catch (const nlohmann::json::exception &e) {
            throw InvalidArgument(std::string("bad --spec JSON: ") + e.what());
        }
        try {
            cfg.spec = specFromJson(j);
        } catch (const nlohmann::json::exception &e) {
            throw InvalidArgument(std::string("bad --spec JSON: ") + e.what());
        }
        cfg.family = cfg.spec->family();
        if (!single) {
            cfg.spec.reset();
        }
        return;
    }
    if (s.family.empty()) {
        if (single) {
            throw InvalidArgument("--family is required");
        }
        return;
    }
    cfg.family = FamilySpec::parseFamily(s.family);
    if (!single) {
        return;
    }
    if (!s.n) {
        throw InvalidArgument("--n is required");
    }
    if (*cfg.family == Family::TwistedToroid && !s.m) {
        throw InvalidArgument("--m is required for twisted_toroid");
    }
    if (*cfg.family != Family::TwistedToroid && s.m) {
        throw InvalidArgument("--m only applies to twisted_toroid");
    }
    cfg.spec = specFor(*cfg.family, *s.n, s.m);
}

std::uint64_t amplitudeCapFromEnv() {
    const char *env = std::getenv("QWALK_MAX_AMPS");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    std::uint64_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
        throw InvalidArgument("QWALK_MAX_AMPS must be a positive integer");
    }
    return value;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Coined quantum-walk search: simulation, circuit compilation and scans", "qwalk"};
    app.require_subcommand(1);

    RunConfig cfg;
    SpecOptions spec;

    auto *simulate = app.add_subcommand("simulate", "success-probability curve and peak report");
    addSpecOptions(*simulate, spec, cfg);
    simulate->add_option("--tmax", cfg.tMax, "last step (default ceil(6 sqrt(N)))")
        ->check(CLI::PositiveNumber);

    auto *compile = app.add_subcommand("compile", "emit the lowered step circuit and a manifest");
    addSpecOptions(*compile, spec, cfg);

    auto *verify = app.add_subcommand("verify", "check a step circuit against the structured walk");
    addSpecOptions(*verify, spec, cfg);
    verify->add_option("--tol", cfg.tolerance, "maximum allowed deviation")->check(CLI::NonNegativeNumber);
    verify->add_option("--circuit", cfg.circuitFile, "circuit file to check instead of compiling");
    verify->add_option("--steps", cfg.steps, "trajectory length")->check(CLI::PositiveNumber);

    auto *scan = app.add_subcommand("scan", "steps-to-peak or gate-count scaling over sizes");
    addSpecOptions(*scan, spec, cfg);
    scan->add_option("--sizes", cfg.sizes, "n values (toroid uses n = m)")->delimiter(',');
    scan->add_option("--metric", spec.metric, "steps to peak or lowered gate counts")
        ->check(CLI::IsMember({"steps", "gates"}));
    scan->add_option("--window-scale", cfg.windowScale, "window is ceil(scale sqrt(N))")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "qwalk: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        cfg.maxAmplitudes = amplitudeCapFromEnv();
        if (*simulate) {
            cfg.command = Command::Simulate;
        } else if (*compile) {
            cfg.command = Command::Compile;
        } else if (*verify) {
            cfg.command = Command::Verify;
        } else {
            cfg.command = Command::Scan;
        }
        resolveSpec(spec, cfg, cfg.command != Command::Scan);
        switch (cfg.command) {
        case Command::Simulate:
            return cmdSimulate(cfg, out);
        case Command::Compile:
            return cmdCompile(cfg, out);
        case Command::Verify:
            return cmdVerify(cfg, out);
        case Command::Scan:
            return cmdScan(cfg, out);
        }
    } catch (const SizeCapExceeded &e) {
        err << "qwalk: " << e.what() << "\n";
        return kSizeCap;
    } catch (const NotCompilable &e) {
        err << "qwalk: " << e.what() << "\n";
        return kNotCompilable;
    } catch (const ParseError &e) {
        err << "qwalk: " << cfg.circuitFile << ": " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidArgument &e) {
        err << "qwalk: " << e.what() << "\n";
        const auto *sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        if (std::string(e.what()).find("required") != std::string::npos) {
            err << sub->help();
        }
        return kUsage;
    } catch (const Error &e) {
        err << "qwalk: " << e.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}

} // namespace qwalk::cli
