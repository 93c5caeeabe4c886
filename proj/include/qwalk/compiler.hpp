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
 * Step circuits for the search walk and the lowering pass that expands
 * composite gates into CX/CZ/CPHASE plus single-qubit gates.
 *
 * Ancilla convention: lowering a composite gate may borrow any qubit of the
 * layout's ancilla register that the gate does not itself touch, and returns
 * it to |0>. An ancilla that holds a live value must therefore be referenced
 * by every composite gate inside its live range; the builders here keep the
 * match bit as a control of every gate they condition on it.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/circuit.hpp"
#include "qwalk/graphs.hpp"

namespace qwalk {

using GateList = std::vector<Gate>;

/// Grover reflection 2|s><s| - I on `reg`, including the global phase -1 as
/// GPHASE(pi). Composite once |reg| >= 3.
GateList groverGates(std::span<const Qubit> reg);

/// |x> -> |x + 1 mod 2^k>; reg[0] is the least significant bit. Composite.
GateList incrementGates(std::span<const Qubit> reg);
GateList decrementGates(std::span<const Qubit> reg);

/// Elementary multi-controlled NOT. The ancilla chain is built from
/// relative-phase Toffolis and undone exactly; only the gate onto `target` is
/// a full Toffoli. Needs max(0, |controls| - 2) clean ancillas.
GateList mcxGates(std::span<const Control> controls, Qubit target,
                  std::span<const Qubit> ancilla);

/// Elementary circuit multiplying by -1 exactly the basis states matching
/// `pattern`. Needs max(0, |pattern| - 3) clean ancillas.
GateList phasePiGates(std::span<const Control> pattern, std::span<const Qubit> ancilla);

/// Applies `body` iff `pattern` matches. For a single-qubit pattern the
/// control is attached to each gate directly; otherwise the conjunction is
/// computed into ancilla[0] with the rest as chain ancillas.
GateList controlledGates(std::span<const Gate> body, std::span<const Control> pattern,
                         std::span<const Qubit> ancilla);

/// Six-CX Toffoli.
GateList toffoliGates(Qubit a, Qubit b, Qubit target);
/// Three-CX Toffoli up to a diagonal phase on (a, b, target). Exact when
/// undone by its inverse with the target used only as a control in between.
GateList relativeToffoliGates(Qubit a, Qubit b, Qubit target);
/// Reverse order, each gate inverted.
GateList inverseGates(std::span<const Gate> gates);
/// Controlled Hadamard from one CX and single-qubit phases.
GateList controlledHGates(Qubit control, Qubit target);

/// Register "q" of width k, plus an "ancilla" register of width k - 3 when
/// k >= 4. Elementary.
Circuit buildGrover(unsigned k);
/// Register "q" of width k (plus ancilla when k >= 4). Composite.
Circuit buildIncrement(unsigned k);
Circuit buildDecrement(unsigned k);

Circuit buildMCX(const RegisterLayout &layout, std::span<const Control> controls, Qubit target,
                 std::span<const Qubit> ancilla);
Circuit buildControlledPhasePi(const RegisterLayout &layout, std::span<const Control> pattern,
                               std::span<const Qubit> ancilla);
Circuit buildControlled(const Circuit &body, std::span<const Control> pattern,
                        std::span<const Qubit> ancilla);

struct StepCircuitPlan {
    FamilySpec spec;
    NodeId marked = 0;
    RegisterLayout layout;
    Qubit ancillaBudget = 0;
};

/// Hypercube needs a power-of-two dimension n >= 2; the other families
/// always compile.
bool isCompilable(const FamilySpec &spec);

/// Register layout and ancilla count for one step. Throws NotCompilable.
///
/// Registers, low qubits first: hypercube and complete graph "node",
/// "subnode", "ancilla"; toroid "y", "x", "subnode", "ancilla". The node
/// register(s) therefore hold the node index in binary.
StepCircuitPlan planStep(const FamilySpec &spec, NodeId marked);

/// Composite circuit for one step U = S C with the marked-node coin -I.
Circuit buildStepCircuit(const FamilySpec &spec, NodeId marked);

/// Expands every composite gate. Throws AncillaBudgetExceeded.
Circuit lower(const Circuit &c);

} // namespace qwalk
