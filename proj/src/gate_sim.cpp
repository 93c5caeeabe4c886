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

#include "qwalk/gate_sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

std::size_t dimOf(Qubit q) {
    if (q > kMaxSimulatedQubits) {
        throw SizeCapExceeded(std::to_string(q) + " qubits exceeds the state-vector cap of " +
                              std::to_string(kMaxSimulatedQubits));
    }
    return std::size_t{1} << q;
}

// Visits every index with the target bit clear and all control bits set.
template <typename Fn>
void forEachPair(std::span<Amplitude> amps, Qubit target, std::size_t controlMask, Fn fn) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            if ((i & controlMask) == controlMask) {
                fn(amps[i], amps[i | stride]);
            }
        }
    }
}

} // namespace

QubitState::QubitState(Qubit qubits) : qubits_(qubits), amps_(dimOf(qubits)) { amps_[0] = 1.0; }

QubitState::QubitState(Qubit qubits, std::vector<Amplitude> amps)
    : qubits_(qubits), amps_(std::move(amps)) {
    if (amps_.size() != dimOf(qubits)) {
        throw InvalidArgument("amplitude count does not match 2^" + std::to_string(qubits));
    }
}

QubitState QubitState::basis(Qubit qubits, std::size_t index) {
    QubitState s(qubits);
    if (index >= s.amps_.size()) {
        throw InvalidArgument("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double QubitState::norm() const {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

void applyGate(const Gate &g, QubitState &state) {
    using namespace std::complex_literals;
    if (!g.isElementary()) {
        throw InvalidArgument("gate-level simulation needs elementary gates, found " +
                              kindName(g.kind));
    }
    for (Qubit q : g.qubits()) {
        if (q >= state.qubits()) {
            throw InvalidArgument("gate touches qubit outside the state");
        }
    }
    auto amps = state.amplitudes();
    const std::size_t mask = g.controls.empty() ? 0 : std::size_t{1} << g.controls[0].qubit;

    switch (g.base()) {
    case BaseOp::GlobalPhase: {
        const Amplitude f = std::exp(1i * g.angle);
        for (auto &a : amps) {
            a *= f;
        }
        return;
    }
    case BaseOp::X:
        forEachPair(amps, g.targets[0], mask, [](Amplitude &a0, Amplitude &a1) { std::swap(a0, a1); });
        return;
    case BaseOp::Z:
        forEachPair(amps, g.targets[0], mask, [](Amplitude &, Amplitude &a1) { a1 = -a1; });
        return;
    case BaseOp::Phase: {
        const Amplitude f = std::exp(1i * g.angle);
        forEachPair(amps, g.targets[0], mask, [f](Amplitude &, Amplitude &a1) { a1 *= f; });
        return;
    }
    case BaseOp::H: {
        const double r = 1.0 / std::numbers::sqrt2;
        forEachPair(amps, g.targets[0], mask, [r](Amplitude &a0, Amplitude &a1) {
            const Amplitude s = a0 + a1;
            const Amplitude d = a0 - a1;
            a0 = r * s;
            a1 = r * d;
        });
        return;
    }
    }
}

void runInPlace(const Circuit &c, QubitState &state) {
    if (c.qubitCount() != state.qubits()) {
        throw InvalidArgument("circuit has " + std::to_string(c.qubitCount()) +
                              " qubits, state has " + std::to_string(state.qubits()));
    }
    for (const Gate &g : c.gates()) {
        if (!g.isElementary()) {
            throw InvalidArgument("run needs an elementary circuit; lower it first");
        }
    }
    for (const Gate &g : c.gates()) {
        applyGate(g, state);
    }
}

QubitState run(const Circuit &c, QubitState state) {
    runInPlace(c, state);
    return state;
}

namespace {

void requireLayoutFor(const FamilySpec &spec, const RegisterLayout &layout) {
    const auto width = [&](std::string_view name) { return layout.at(name).width; };
    const Qubit subBits =
        static_cast<Qubit>(std::bit_width(spec.degree() - 1));
    if (width("subnode") != subBits) {
        throw InvalidArgument("subnode register width does not match " + spec.str());
    }
    if (spec.family() == Family::TwistedToroid) {
        if (width("x") != spec.n() || width("y") != spec.m()) {
            throw InvalidArgument("coordinate registers do not match " + spec.str());
        }
    } else if (width("node") != spec.n()) {
        throw InvalidArgument("node register does not match " + spec.str());
    }
}

std::size_t place(const Register &r, std::uint64_t value) {
    return static_cast<std::size_t>(value) << r.offset;
}

} // namespace

std::size_t embedIndex(const FamilySpec &spec, const RegisterLayout &layout, Site site) {
    if (site.node >= spec.nodeCount() || site.subnode >= spec.degree()) {
        throw InvalidArgument("site out of range for " + spec.str());
    }
    std::size_t index = place(layout.at("subnode"), site.subnode);
    if (spec.family() == Family::TwistedToroid) {
        const GridPoint p = toGrid(spec, site.node);
        index |= place(layout.at("x"), p.x) | place(layout.at("y"), p.y);
    } else {
        index |= place(layout.at("node"), site.node);
    }
    return index;
}

QubitState embedWalkState(const FamilySpec &spec, const WalkState &w,
                          const RegisterLayout &layout) {
    if (!(w.spec() == spec)) {
        throw InvalidArgument("walk state belongs to a different graph");
    }
    requireLayoutFor(spec, layout);
    std::vector<Amplitude> amps(dimOf(layout.qubitCount()));
    for (NodeId v = 0; v < spec.nodeCount(); ++v) {
        for (SubnodeId a = 0; a < spec.degree(); ++a) {
            amps[embedIndex(spec, layout, {v, a})] = w.at({v, a});
        }
    }
    return QubitState(layout.qubitCount(), std::move(amps));
}

ExtractedWalk extractWalkState(const FamilySpec &spec, const QubitState &psi,
                               const RegisterLayout &layout) {
    requireLayoutFor(spec, layout);
    if (psi.qubits() != layout.qubitCount()) {
        throw InvalidArgument("state does not match layout");
    }
    const auto src = psi.amplitudes();
    std::vector<bool> inside(src.size(), false);
    std::vector<Amplitude> amps(spec.nodeCount() * spec.degree());
    for (NodeId v = 0; v < spec.nodeCount(); ++v) {
        for (SubnodeId a = 0; a < spec.degree(); ++a) {
            const std::size_t i = embedIndex(spec, layout, {v, a});
            amps[v * spec.degree() + a] = src[i];
            inside[i] = true;
        }
    }
    double leak = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!inside[i]) {
            leak += std::norm(src[i]);
        }
    }
    return {WalkState(spec, std::move(amps)), leak};
}

double phaseAlignedDeviation(std::span<const Amplitude> candidate,
                             std::span<const Amplitude> reference) {
    if (candidate.size() != reference.size()) {
        throw InvalidArgument("length mismatch in phase-aligned comparison");
    }
    if (reference.empty()) {
        return 0.0;
    }
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < reference.size(); ++i) {
        if (std::abs(reference[i]) > std::abs(reference[pivot])) {
            pivot = i;
        }
    }
    Amplitude phase = 1.0;
    if (std::abs(candidate[pivot]) > 0.0 && std::abs(reference[pivot]) > 0.0) {
        phase = std::polar(1.0, std::arg(reference[pivot]) - std::arg(candidate[pivot]));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        worst = std::max(worst, std::abs(candidate[i] * phase - reference[i]));
    }
    return worst;
}

UnitaryCheck compareStepUnitary(const Circuit &c, const FamilySpec &spec, NodeId marked,
                                Qubit maxQubits) {
    requireLayoutFor(spec, c.layout());
    const std::size_t d = spec.degree();
    const std::size_t dim = spec.nodeCount() * d;
    const std::size_t full = std::size_t{1} << c.qubitCount();

    std::vector<std::size_t> embedded(dim);
    Eigen::MatrixXcd inputs = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(full),
                                                     static_cast<Eigen::Index>(dim));
    for (NodeId v = 0; v < spec.nodeCount(); ++v) {
        for (SubnodeId a = 0; a < d; ++a) {
            const std::size_t j = v * d + a;
            embedded[j] = embedIndex(spec, c.layout(), {v, a});
            inputs(static_cast<Eigen::Index>(embedded[j]), static_cast<Eigen::Index>(j)) = 1.0;
        }
    }
    const Eigen::MatrixXcd images = applyToColumns(c, std::move(inputs), maxQubits);
    const Eigen::MatrixXcd reference = stepMatrix(spec, SearchConfig{marked});

    std::vector<bool> inside(full, false);
    for (std::size_t i : embedded) {
        inside[i] = true;
    }
    UnitaryCheck out;
    std::vector<Amplitude> got(dim * dim);
    std::vector<Amplitude> want(dim * dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const auto col = static_cast<Eigen::Index>(j);
        double leak = 0.0;
        for (std::size_t i = 0; i < full; ++i) {
            if (!inside[i]) {
                leak += std::norm(images(static_cast<Eigen::Index>(i), col));
            }
        }
        out.ancillaLeak = std::max(out.ancillaLeak, leak);
        for (std::size_t i = 0; i < dim; ++i) {
            got[j * dim + i] = images(static_cast<Eigen::Index>(embedded[i]), col);
            want[j * dim + i] = reference(static_cast<Eigen::Index>(i), col);
        }
    }
    out.maxDeviation = phaseAlignedDeviation(got, want);
    return out;
}

TrajectoryCheck compareTrajectory(const Circuit &c, const FamilySpec &spec, NodeId marked,
                                  std::size_t steps) {
    const SearchWalk walk(spec, SearchConfig{marked});
    WalkState structured = uniformState(spec);
    QubitState psi = embedWalkState(spec, structured, c.layout());

    TrajectoryCheck out;
    out.steps = steps;
    for (std::size_t t = 0; t < steps; ++t) {
        walk.step(structured);
        runInPlace(c, psi);
        const ExtractedWalk got = extractWalkState(spec, psi, c.layout());
        out.maxLeak = std::max(out.maxLeak, got.ancillaLeak);
        out.maxAmplitudeDeviation =
            std::max(out.maxAmplitudeDeviation,
                     phaseAlignedDeviation(got.state.amplitudes(), structured.amplitudes()));
        out.maxProbabilityDeviation =
            std::max(out.maxProbabilityDeviation, std::abs(markedProbability(got.state, marked) -
                                                           markedProbability(structured, marked)));
    }
    return out;
}

} // namespace qwalk
