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

/**
 * @file
 * Structured simulator for the search walk U = S C on the (node, subnode)
 * amplitude space. The coin is the Grover reflection on every unmarked
 * node and -I on the marked node.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/graphs.hpp"

namespace qwalk {

using Amplitude = std::complex<double>;

inline constexpr std::uint64_t kDefaultMaxAmplitudes = std::uint64_t{1} << 26;
/// Hard ceiling for the configurable cap; shift tables use 32-bit indices.
inline constexpr std::uint64_t kAbsoluteMaxAmplitudes = std::uint64_t{1} << 32;

/// Throws SizeCapExceeded if nodeCount * degree exceeds `maxAmplitudes`.
void checkSizeCap(const FamilySpec &spec, std::uint64_t maxAmplitudes);

/// Dense amplitudes indexed by node * degree + subnode.
class WalkState {
  public:
    WalkState(FamilySpec spec, std::vector<Amplitude> amps);

    const FamilySpec &spec() const noexcept { return spec_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    std::span<Amplitude> amplitudes() noexcept { return amps_; }

    Amplitude at(Site s) const { return amps_[index(s)]; }
    Amplitude &at(Site s) { return amps_[index(s)]; }
    std::size_t index(Site s) const;

    double norm() const;

  private:
    FamilySpec spec_;
    std::vector<Amplitude> amps_;
};

/// Marked node of the search. Empty disables the perturbation so that every
/// node receives the Grover coin.
struct SearchConfig {
    std::optional<NodeId> marked;
};

WalkState uniformState(const FamilySpec &spec,
                       std::uint64_t maxAmplitudes = kDefaultMaxAmplitudes);
WalkState basisState(const FamilySpec &spec, Site site,
                     std::uint64_t maxAmplitudes = kDefaultMaxAmplitudes);

/// The shift operator as an index permutation, built once per spec. It is its
/// own inverse.
class ShiftTable {
  public:
    explicit ShiftTable(const FamilySpec &spec,
                        std::uint64_t maxAmplitudes = kDefaultMaxAmplitudes);

    const FamilySpec &spec() const noexcept { return spec_; }
    std::uint32_t target(std::size_t index) const { return perm_[index]; }
    void apply(std::span<Amplitude> amps) const;

  private:
    FamilySpec spec_;
    std::vector<std::uint32_t> perm_;
};

void applyCoinInPlace(WalkState &state, const SearchConfig &cfg);
WalkState applyCoin(WalkState state, const SearchConfig &cfg);
WalkState applyShift(WalkState state);
WalkState step(WalkState state, const SearchConfig &cfg);

double markedProbability(const WalkState &state, NodeId marked);

inline constexpr std::size_t kDefaultMaxDenseDim = 4096;

/// Dense U = S C in the node * degree + subnode basis, built column by column.
Eigen::MatrixXcd stepMatrix(const FamilySpec &spec, const SearchConfig &cfg,
                            std::size_t maxDim = kDefaultMaxDenseDim);

/// Repeated steps with a cached shift table.
class SearchWalk {
  public:
    SearchWalk(const FamilySpec &spec, SearchConfig cfg,
               std::uint64_t maxAmplitudes = kDefaultMaxAmplitudes);

    const FamilySpec &spec() const noexcept { return shift_.spec(); }
    const SearchConfig &config() const noexcept { return cfg_; }

    void step(WalkState &state) const;

  private:
    ShiftTable shift_;
    SearchConfig cfg_;
};

/// Success probability p(t) for t = 0..steps, plus the uniform baseline.
struct Curve {
    std::optional<FamilySpec> spec;
    std::optional<NodeId> marked;
    double baseline = 0.0;
    std::vector<double> probabilities;

    std::size_t size() const noexcept { return probabilities.size(); }
    /// Synthetic curve with no graph attached.
    static Curve fromValues(std::vector<double> values, double baseline = 0.0);
};

/// Starts from the uniform state. Requires a marked node.
Curve evolve(const FamilySpec &spec, const SearchConfig &cfg, std::size_t steps,
             std::uint64_t maxAmplitudes = kDefaultMaxAmplitudes);

} // namespace qwalk
