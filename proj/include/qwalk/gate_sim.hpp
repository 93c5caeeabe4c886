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
 * State-vector execution of elementary circuits, and the bridge between the
 * (node, subnode) walk space and qubit registers used to cross-check
 * compiled step circuits against the structured simulator.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/circuit.hpp"
#include "qwalk/graphs.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr Qubit kMaxSimulatedQubits = 30;

class QubitState {
  public:
    /// |0...0> on q qubits.
    explicit QubitState(Qubit qubits);
    QubitState(Qubit qubits, std::vector<Amplitude> amps);

    static QubitState basis(Qubit qubits, std::size_t index);

    Qubit qubits() const noexcept { return qubits_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    double norm() const;

  private:
    Qubit qubits_;
    std::vector<Amplitude> amps_;
};

/// Applies one elementary gate in place.
void applyGate(const Gate &g, QubitState &state);

/// Throws InvalidArgument on a composite gate or a qubit-count mismatch.
void runInPlace(const Circuit &c, QubitState &state);
QubitState run(const Circuit &c, QubitState state);

/// Basis index of (v, a) with every ancilla at 0. Node registers ("node",
/// or "x" and "y" for the toroid) hold the node, "subnode" the coin value.
std::size_t embedIndex(const FamilySpec &spec, const RegisterLayout &layout, Site site);

QubitState embedWalkState(const FamilySpec &spec, const WalkState &w,
                          const RegisterLayout &layout);

struct ExtractedWalk {
    WalkState state;
    /// Probability outside the embedded subspace.
    double ancillaLeak = 0.0;
};

ExtractedWalk extractWalkState(const FamilySpec &spec, const QubitState &psi,
                               const RegisterLayout &layout);

/// Maximum |a e^{i phi} - b| with phi fixed by the largest-magnitude entry
/// of `reference`.
double phaseAlignedDeviation(std::span<const Amplitude> candidate,
                             std::span<const Amplitude> reference);

struct UnitaryCheck {
    double maxDeviation = 0.0;
    /// Worst-case probability leaving the ancilla-|0> subspace over all
    /// embedded input columns.
    double ancillaLeak = 0.0;
};

/// Compares the circuit on the ancilla-|0> subspace with the structured step
/// matrix, up to one global phase. Needs qubitCount <= toUnitary's cap.
UnitaryCheck compareStepUnitary(const Circuit &c, const FamilySpec &spec, NodeId marked,
                                Qubit maxQubits = kDefaultUnitaryQubitCap);

struct TrajectoryCheck {
    std::size_t steps = 0;
    double maxAmplitudeDeviation = 0.0;
    double maxProbabilityDeviation = 0.0;
    double maxLeak = 0.0;
};

/// Runs `steps` repetitions of an elementary step circuit from the embedded
/// uniform state and compares each step with the structured simulator.
TrajectoryCheck compareTrajectory(const Circuit &c, const FamilySpec &spec, NodeId marked,
                                  std::size_t steps);

} // namespace qwalk
