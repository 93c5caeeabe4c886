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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/analysis.hpp"
#include "qwalk/compiler.hpp"
#include "qwalk/gate_sim.hpp"
#include "qwalk/graphs.hpp"
#include "qwalk/walk.hpp"

#ifndef QWALK_CLI_PATH
#error "QWALK_CLI_PATH must name the qwalk executable"
#endif

namespace fs = std::filesystem;
using namespace qwalk;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Detail {
  public:
    template <typename T> Detail &operator<<(const T &v) {
        os_ << v;
        return *this;
    }
    std::string str() const { return os_.str(); }

  private:
    std::ostringstream os_;
};

int runCriterion(int id, const char *title, double limitSeconds,
                 const std::function<Outcome()> &body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception &e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool inTime = limitSeconds <= 0.0 || secs < limitSeconds;
    const bool pass = r.pass && inTime;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " [" << title << "] "
              << r.detail << " (" << timing;
    if (limitSeconds > 0.0) {
        std::cout << " of " << limitSeconds << "s";
    }
    std::cout << ")" << std::endl;
    return pass ? 0 : 1;
}

std::vector<NodeId> markedChoices(const FamilySpec &spec) {
    const NodeId n = spec.nodeCount();
    std::vector<NodeId> out{0, defaultMarkedNode(spec), n - 1};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<FamilySpec> &circuitSpecs() {
    static const std::vector<FamilySpec> specs{FamilySpec::hypercube(2), FamilySpec::hypercube(4),
                                               FamilySpec::complete(2),
                                               FamilySpec::twistedToroid(2, 2)};
    return specs;
}

// Dense S * C assembled from the neighbor map and the coin definition alone.
Eigen::MatrixXcd denseStep(const FamilySpec &spec, NodeId marked) {
    const auto N = static_cast<Eigen::Index>(spec.nodeCount());
    const auto d = static_cast<Eigen::Index>(spec.degree());
    const Eigen::Index dim = N * d;
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::MatrixXcd grover =
        Eigen::MatrixXcd::Constant(d, d, 2.0 / static_cast<double>(d)) -
        Eigen::MatrixXcd::Identity(d, d);
    for (Eigen::Index v = 0; v < N; ++v) {
        C.block(v * d, v * d, d, d) = static_cast<NodeId>(v) == marked
                                          ? Eigen::MatrixXcd(-Eigen::MatrixXcd::Identity(d, d))
                                          : grover;
        for (Eigen::Index a = 0; a < d; ++a) {
            const Site t = neighbor(spec, static_cast<NodeId>(v), static_cast<SubnodeId>(a));
            S(static_cast<Eigen::Index>(t.node) * d + static_cast<Eigen::Index>(t.subnode),
              v * d + a) = 1.0;
        }
    }
    return S * C;
}

Outcome involution() {
    std::vector<FamilySpec> specs;
    for (unsigned n = 1; n <= 6; ++n) {
        specs.push_back(FamilySpec::hypercube(n));
    }
    for (unsigned n = 1; n <= 4; ++n) {
        specs.push_back(FamilySpec::complete(n));
    }
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 1; m <= 4; ++m) {
            specs.push_back(FamilySpec::twistedToroid(n, m));
        }
    }
    std::size_t sites = 0;
    for (const auto &spec : specs) {
        for (NodeId v = 0; v < spec.nodeCount(); ++v) {
            for (SubnodeId a = 0; a < spec.degree(); ++a) {
                const Site back = neighbor(spec, neighbor(spec, v, a));
                ++sites;
                if (back.node != v || back.subnode != a) {
                    return {false, spec.str() + " breaks at node " + std::to_string(v)};
                }
            }
        }
    }
    return {true, std::to_string(specs.size()) + " specs, " + std::to_string(sites) + " sites"};
}

Outcome operatorOracle() {
    const FamilySpec specs[] = {FamilySpec::hypercube(3), FamilySpec::complete(2),
                                FamilySpec::twistedToroid(2, 2)};
    double worst = 0.0;
    for (const auto &spec : specs) {
        const NodeId marked = defaultMarkedNode(spec);
        const double dev = (stepMatrix(spec, SearchConfig{marked}) - denseStep(spec, marked))
                               .cwiseAbs()
                               .maxCoeff();
        worst = std::max(worst, dev);
    }
    return {worst <= 1e-12, (Detail() << "max deviation " << worst << " (limit 1e-12)").str()};
}

Outcome circuitCorrectness() {
    double worstDev = 0.0;
    double worstLeak = 0.0;
    std::size_t cases = 0;
    for (const auto &spec : circuitSpecs()) {
        for (NodeId marked : markedChoices(spec)) {
            const Circuit c = lower(buildStepCircuit(spec, marked));
            const UnitaryCheck u = compareStepUnitary(c, spec, marked);
            worstDev = std::max(worstDev, u.maxDeviation);
            worstLeak = std::max(worstLeak, u.ancillaLeak);
            ++cases;
        }
    }
    return {worstDev <= 1e-10 && worstLeak <= 1e-10,
            (Detail() << cases << " cases, max deviation " << worstDev << ", max leak "
                      << worstLeak << " (limit 1e-10)")
                .str()};
}

Outcome trajectoryAgreement() {
    double amp = 0.0;
    double prob = 0.0;
    double leak = 0.0;
    for (const auto &spec : circuitSpecs()) {
        for (NodeId marked : markedChoices(spec)) {
            const TrajectoryCheck t =
                compareTrajectory(lower(buildStepCircuit(spec, marked)), spec, marked, 25);
            amp = std::max(amp, t.maxAmplitudeDeviation);
            prob = std::max(prob, t.maxProbabilityDeviation);
            leak = std::max(leak, t.maxLeak);
        }
    }
    return {amp <= 1e-8 && prob <= 1e-10 && leak <= 1e-10,
            (Detail() << "25 steps, amplitude " << amp << " (1e-8), probability " << prob
                      << " (1e-10), leak " << leak << " (1e-10)")
                .str()};
}

Outcome hypercubeSearch() {
    const auto spec = FamilySpec::hypercube(5);
    const PeakReport r = findPeak(successCurve(spec, defaultMarkedNode(spec), 200));
    const bool peakOk = r.pStar >= 0.1 && r.tStar >= 6 && r.tStar <= 12;
    const double target = 2.0 * static_cast<double>(r.tStar);
    const bool periodOk = r.period && std::abs(*r.period - target) <= 0.25 * target;
    Detail d;
    d << "tStar " << r.tStar << ", pStar " << r.pStar << " (baseline " << r.baseline
      << "), period ";
    if (r.period) {
        d << *r.period;
    } else {
        d << "none";
    }
    d << " vs 2*tStar " << target;
    return {peakOk && periodOk, d.str()};
}

std::vector<FamilySpec> toroidScan() {
    std::vector<FamilySpec> out;
    for (unsigned n = 2; n <= 6; ++n) {
        out.push_back(FamilySpec::twistedToroid(n, n));
    }
    return out;
}

Outcome toroidScaling() {
    const ScalingScan scan = scalingScan(toroidScan());
    Detail d;
    d << "tStar";
    for (const auto &row : scan.rows) {
        d << " " << row.nodeCount << ":" << row.peak.tStar;
    }
    d << "; alpha " << scan.fit.alpha << " (want [0.4, 0.6]), r2 " << scan.fit.r2
      << " (want >= 0.95)";
    return {scan.fit.alpha >= 0.4 && scan.fit.alpha <= 0.6 && scan.fit.r2 >= 0.95, d.str()};
}

Outcome gateScaling() {
    std::vector<FamilySpec> hyper;
    for (unsigned n : {2u, 4u, 8u, 16u}) {
        hyper.push_back(FamilySpec::hypercube(n));
    }
    std::vector<FamilySpec> complete;
    for (unsigned n = 2; n <= 8; ++n) {
        complete.push_back(FamilySpec::complete(n));
    }
    const GateCountScan h = gateCountScan(hyper);
    const GateCountScan c = gateCountScan(complete);
    const GateCountScan t = gateCountScan(toroidScan());

    // One constant for the whole toroid scan, fixed by the smallest size.
    auto bound = [](const FamilySpec &s) {
        const double n = s.n();
        const double m = s.m();
        return n * n * m + m * m * n;
    };
    const double cBound = static_cast<double>(t.rows.front().twoQubitGates) /
                          bound(t.rows.front().spec);
    bool bounded = true;
    for (const auto &row : t.rows) {
        bounded = bounded && static_cast<double>(row.twoQubitGates) <= cBound * bound(row.spec);
    }

    const bool ok = h.fit.alpha <= 1.5 && c.fit.alpha <= 1.5 && t.fit.alpha <= 3.5 && bounded;
    Detail d;
    d << "k hypercube " << h.fit.alpha << " (<= 1.5), complete " << c.fit.alpha
      << " (<= 1.5), toroid " << t.fit.alpha << " (<= 3.5); toroid counts";
    for (const auto &row : t.rows) {
        d << " " << row.twoQubitGates;
    }
    d << (bounded ? " within " : " exceed ") << cBound << "*(n^2 m + m^2 n)";
    return {ok, d.str()};
}

Outcome totalCost() {
    std::vector<FamilySpec> specs;
    for (unsigned n = 2; n <= 6; ++n) {
        specs.push_back(FamilySpec::complete(n));
    }
    const ScalingScan steps = scalingScan(specs);
    const GateCountScan gates = gateCountScan(specs);
    std::vector<double> ratios;
    double logSum = 0.0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const double N = static_cast<double>(specs[i].nodeCount());
        const double total = static_cast<double>(steps.rows[i].peak.tStar) *
                             static_cast<double>(gates.rows[i].twoQubitGates);
        const double model = std::sqrt(N) * std::log2(N);
        ratios.push_back(total / model);
        logSum += std::log(total / model);
    }
    const double c = std::exp(logSum / static_cast<double>(ratios.size()));
    bool ok = true;
    Detail d;
    d << "c " << c << ", total/(c*sqrt(N)*log2 N):";
    for (double r : ratios) {
        d << " " << r / c;
        ok = ok && r / c >= 0.5 && r / c <= 2.0;
    }
    d << " (want [0.5, 2])";
    return {ok, d.str()};
}

Outcome conservation() {
    const FamilySpec specs[] = {FamilySpec::hypercube(4), FamilySpec::complete(3),
                                FamilySpec::twistedToroid(2, 2)};
    double drift = 0.0;
    double marginal = 0.0;
    std::mt19937_64 rng(20261016);
    std::normal_distribution<double> gauss;
    for (const auto &spec : specs) {
        const NodeId marked = defaultMarkedNode(spec);
        const SearchWalk walk(spec, SearchConfig{marked});
        WalkState s = uniformState(spec);
        for (int t = 0; t < 10000; ++t) {
            walk.step(s);
        }
        drift = std::max(drift, std::abs(s.norm() - 1.0));

        WalkState r = uniformState(spec);
        for (auto &a : r.amplitudes()) {
            a = {gauss(rng), gauss(rng)};
        }
        const double scale = 1.0 / r.norm();
        for (auto &a : r.amplitudes()) {
            a *= scale;
        }
        const WalkState coined = applyCoin(r, SearchConfig{marked});
        for (NodeId v = 0; v < spec.nodeCount(); ++v) {
            double before = 0.0;
            double after = 0.0;
            for (SubnodeId a = 0; a < spec.degree(); ++a) {
                before += std::norm(r.at({v, a}));
                after += std::norm(coined.at({v, a}));
            }
            marginal = std::max(marginal, std::abs(after - before));
        }
    }
    return {drift <= 1e-10 && marginal <= 1e-14,
            (Detail() << "norm drift after 1e4 steps " << drift
                      << " (1e-10), worst node-marginal change " << marginal
                      << " (1e-14)")
                .str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
    const std::string cli = QWALK_CLI_PATH;
    const std::vector<std::string> commands{
        "simulate --family hypercube --n 5 --tmax 200 --out c5",
        "scan --family twisted_toroid --metric steps --out c6",
        "scan --family hypercube --metric gates --out c7_hypercube",
        "scan --family complete --metric gates --out c7_complete",
        "scan --family twisted_toroid --metric gates --out c7_toroid",
        "scan --family complete --sizes 2,3,4,5,6 --metric steps --out c8_steps",
        "scan --family complete --sizes 2,3,4,5,6 --metric gates --out c8_gates",
    };
    const fs::path root = fs::temp_directory_path() / "qwalk_acceptance_determinism";
    fs::remove_all(root);
    for (const char *run : {"run1", "run2"}) {
        const fs::path dir = root / run;
        fs::create_directories(dir);
        for (const auto &cmd : commands) {
            const std::string line = "cd '" + dir.string() + "' && '" + cli + "' " + cmd + " > /dev/null";
            if (std::system(line.c_str()) != 0) {
                return {false, "command failed: " + cmd};
            }
        }
    }
    std::size_t files = 0;
    for (const auto &entry : fs::directory_iterator(root / "run1")) {
        const fs::path other = root / "run2" / entry.path().filename();
        if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
            return {false, entry.path().filename().string() + " differs between runs"};
        }
        ++files;
    }
    fs::remove_all(root);
    return {files == 2 * commands.size(),
            (Detail() << files << " output files byte-identical across two runs").str()};
}

} // namespace

int main() {
    std::cout.precision(6);
    int failures = 0;
    failures += runCriterion(1, "shift involution", 1.0, involution);
    failures += runCriterion(2, "operator oracle", 10.0, operatorOracle);
    failures += runCriterion(3, "circuit unitary", 120.0, circuitCorrectness);
    failures += runCriterion(4, "gate-level trajectory", 300.0, trajectoryAgreement);
    failures += runCriterion(5, "hypercube search", 1.0, hypercubeSearch);
    failures += runCriterion(6, "toroid steps scaling", 120.0, toroidScaling);
    failures += runCriterion(7, "gate-count scaling", 60.0, gateScaling);
    failures += runCriterion(8, "total cost", 120.0, totalCost);
    failures += runCriterion(9, "conservation", 30.0, conservation);
    failures += runCriterion(10, "determinism", 0.0, determinism);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
