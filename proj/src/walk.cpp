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

#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qwalk/error.hpp"

namespace qwalk {

void checkSizeCap(const FamilySpec &spec, std::uint64_t maxAmplitudes) {
    const std::uint64_t cap = std::min(maxAmplitudes, kAbsoluteMaxAmplitudes);
    const std::uint64_t nodes = spec.nodeCount();
    const std::uint64_t d = spec.degree();
    if (d != 0 && nodes > cap / d) {
        throw SizeCapExceeded(spec.str() + " needs " + std::to_string(nodes) + " x " +
                              std::to_string(d) + " amplitudes, cap is " +
                              std::to_string(cap));
    }
}

WalkState::WalkState(FamilySpec spec, std::vector<Amplitude> amps)
    : spec_(spec), amps_(std::move(amps)) {
    if (amps_.size() != spec_.nodeCount() * spec_.degree()) {
        throw InvalidArgument("amplitude count does not match " + spec_.str());
    }
}

std::size_t WalkState::index(Site s) const {
    if (s.node >= spec_.nodeCount() || s.subnode >= spec_.degree()) {
        throw InvalidArgument("site out of range for " + spec_.str());
    }
    return static_cast<std::size_t>(s.node * spec_.degree() + s.subnode);
}

double WalkState::norm() const {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

WalkState uniformState(const FamilySpec &spec, std::uint64_t maxAmplitudes) {
    checkSizeCap(spec, maxAmplitudes);
    const std::size_t dim = spec.nodeCount() * spec.degree();
    const double value = 1.0 / std::sqrt(static_cast<double>(dim));
    return WalkState(spec, std::vector<Amplitude>(dim, Amplitude{value, 0.0}));
}

WalkState basisState(const FamilySpec &spec, Site site, std::uint64_t maxAmplitudes) {
    checkSizeCap(spec, maxAmplitudes);
    WalkState state(spec, std::vector<Amplitude>(spec.nodeCount() * spec.degree()));
    state.at(site) = 1.0;
    return state;
}

ShiftTable::ShiftTable(const FamilySpec &spec, std::uint64_t maxAmplitudes) : spec_(spec) {
    checkSizeCap(spec, maxAmplitudes);
    const std::uint64_t nodes = spec.nodeCount();
    const std::uint64_t d = spec.degree();
    perm_.resize(nodes * d);
    for (NodeId v = 0; v < nodes; ++v) {
        for (SubnodeId a = 0; a < d; ++a) {
            const Site to = neighbor(spec, Site{v, a});
            perm_[v * d + a] = static_cast<std::uint32_t>(to.node * d + to.subnode);
        }
    }
}

void ShiftTable::apply(std::span<Amplitude> amps) const {
    if (amps.size() != perm_.size()) {
        throw InvalidArgument("state size does not match shift table");
    }
    // S is an involution, so it decomposes into disjoint transpositions.
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        const std::size_t j = perm_[i];
        if (i < j) {
            std::swap(amps[i], amps[j]);
        }
    }
}

void applyCoinInPlace(WalkState &state, const SearchConfig &cfg) {
    const FamilySpec &spec = state.spec();
    if (cfg.marked && *cfg.marked >= spec.nodeCount()) {
        throw InvalidArgument("marked node out of range for " + spec.str());
    }
    const std::size_t d = spec.degree();
    const double scale = 2.0 / static_cast<double>(d);
    auto amps = state.amplitudes();
    for (NodeId v = 0; v < spec.nodeCount(); ++v) {
        auto block = amps.subspan(v * d, d);
        if (cfg.marked && v == *cfg.marked) {
            for (auto &b : block) {
                b = -b;
            }
            continue;
        }
        Amplitude sum{};
        for (const auto &b : block) {
            sum += b;
        }
        const Amplitude twiceMean = scale * sum;
        for (auto &b : block) {
            b = twiceMean - b;
        }
    }
}

WalkState applyCoin(WalkState state, const SearchConfig &cfg) {
    applyCoinInPlace(state, cfg);
    return state;
}

WalkState applyShift(WalkState state) {
    ShiftTable(state.spec(), kAbsoluteMaxAmplitudes).apply(state.amplitudes());
    return state;
}

WalkState step(WalkState state, const SearchConfig &cfg) {
    applyCoinInPlace(state, cfg);
    return applyShift(std::move(state));
}

double markedProbability(const WalkState &state, NodeId marked) {
    const FamilySpec &spec = state.spec();
    if (marked >= spec.nodeCount()) {
        throw InvalidArgument("marked node out of range for " + spec.str());
    }
    double p = 0.0;
    for (SubnodeId a = 0; a < spec.degree(); ++a) {
        p += std::norm(state.at(Site{marked, a}));
    }
    return p;
}

Eigen::MatrixXcd stepMatrix(const FamilySpec &spec, const SearchConfig &cfg,
                            std::size_t maxDim) {
    checkSizeCap(spec, maxDim);
    const SearchWalk walk(spec, cfg, maxDim);
    const auto dim = static_cast<Eigen::Index>(spec.nodeCount() * spec.degree());
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::vector<Amplitude> amps(static_cast<std::size_t>(dim));
        amps[static_cast<std::size_t>(j)] = 1.0;
        WalkState col(spec, std::move(amps));
        walk.step(col);
        for (Eigen::Index i = 0; i < dim; ++i) {
            u(i, j) = col.amplitudes()[static_cast<std::size_t>(i)];
        }
    }
    return u;
}

SearchWalk::SearchWalk(const FamilySpec &spec, SearchConfig cfg, std::uint64_t maxAmplitudes)
    : shift_(spec, maxAmplitudes), cfg_(cfg) {
    if (cfg_.marked && *cfg_.marked >= spec.nodeCount()) {
        throw InvalidArgument("marked node out of range for " + spec.str());
    }
}

void SearchWalk::step(WalkState &state) const {
    if (!(state.spec() == spec())) {
        throw InvalidArgument("state belongs to a different graph");
    }
    applyCoinInPlace(state, cfg_);
    shift_.apply(state.amplitudes());
}

Curve Curve::fromValues(std::vector<double> values, double baseline) {
    Curve c;
    c.baseline = baseline;
    c.probabilities = std::move(values);
    return c;
}

Curve evolve(const FamilySpec &spec, const SearchConfig &cfg, std::size_t steps,
             std::uint64_t maxAmplitudes) {
    if (!cfg.marked) {
        throw InvalidArgument("evolve needs a marked node");
    }
    SearchWalk walk(spec, cfg, maxAmplitudes);
    WalkState state = uniformState(spec, maxAmplitudes);

    Curve curve;
    curve.spec = spec;
    curve.marked = cfg.marked;
    curve.baseline = 1.0 / static_cast<double>(spec.nodeCount());
    curve.probabilities.reserve(steps + 1);
    curve.probabilities.push_back(markedProbability(state, *cfg.marked));
    for (std::size_t t = 1; t <= steps; ++t) {
        walk.step(state);
        curve.probabilities.push_back(markedProbability(state, *cfg.marked));
    }
    return curve;
}

} // namespace qwalk
