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
 * Circuit intermediate representation.
 *
 * Qubit q is bit q of a basis-state index (little endian). Registers are laid
 * out contiguously in declaration order, so register-local bit i of register
 * r is global qubit r.offset + i.
 *
 * Any gate kind may carry extra controls with either polarity; such gates are
 * composite. A circuit is elementary when it only contains uncontrolled
 * H/X/Z/PHASE/GPHASE and CX/CZ/CPHASE with a single positive control.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Qubit = std::uint32_t;

enum class GateKind { H, X, Z, Phase, CX, CZ, CPhase, Toffoli, MCX, GlobalPhase };

enum class Polarity { Positive, Negative };

struct Control {
    Qubit qubit = 0;
    Polarity polarity = Polarity::Positive;

    bool positive() const noexcept { return polarity == Polarity::Positive; }
    friend bool operator==(const Control &, const Control &) = default;
};

inline Control pos(Qubit q) { return {q, Polarity::Positive}; }
inline Control neg(Qubit q) { return {q, Polarity::Negative}; }

/// The single-qubit operation a gate applies once its controls match.
enum class BaseOp { H, X, Z, Phase, GlobalPhase };

struct Gate {
    GateKind kind = GateKind::X;
    std::vector<Control> controls;
    std::vector<Qubit> targets;
    /// Rotation angle for Phase, CPhase and GlobalPhase.
    double angle = 0.0;

    static Gate h(Qubit t) { return {GateKind::H, {}, {t}, 0.0}; }
    static Gate x(Qubit t) { return {GateKind::X, {}, {t}, 0.0}; }
    static Gate z(Qubit t) { return {GateKind::Z, {}, {t}, 0.0}; }
    static Gate phase(Qubit t, double theta) { return {GateKind::Phase, {}, {t}, theta}; }
    static Gate cx(Qubit c, Qubit t) { return {GateKind::CX, {pos(c)}, {t}, 0.0}; }
    static Gate cz(Qubit c, Qubit t) { return {GateKind::CZ, {pos(c)}, {t}, 0.0}; }
    static Gate cphase(Qubit c, Qubit t, double theta) {
        return {GateKind::CPhase, {pos(c)}, {t}, theta};
    }
    static Gate toffoli(Qubit a, Qubit b, Qubit t) {
        return {GateKind::Toffoli, {pos(a), pos(b)}, {t}, 0.0};
    }
    static Gate mcx(std::vector<Control> controls, Qubit t) {
        return {GateKind::MCX, std::move(controls), {t}, 0.0};
    }
    static Gate globalPhase(double theta) { return {GateKind::GlobalPhase, {}, {}, theta}; }

    BaseOp base() const noexcept;
    bool isElementary() const noexcept;
    bool isTwoQubit() const noexcept;
    /// Every qubit the gate touches, controls first.
    std::vector<Qubit> qubits() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Checks arity, distinctness and angles. Throws InvalidArgument.
void validate(const Gate &g);

/// Same operation with one more control; the kind is renamed where the
/// gate set has a dedicated name (X + 1 control = CX, CX + 1 = TOFFOLI, ...).
Gate addControl(const Gate &g, Control c);

Gate inverse(const Gate &g);

struct Register {
    std::string name;
    Qubit offset = 0;
    Qubit width = 0;

    Qubit operator[](Qubit i) const { return offset + i; }
    std::vector<Qubit> qubits() const;

    friend bool operator==(const Register &, const Register &) = default;
};

inline constexpr std::string_view kAncillaRegister = "ancilla";

class RegisterLayout {
  public:
    RegisterLayout() = default;

    /// Appends a register after the existing ones.
    const Register &add(std::string name, Qubit width);

    std::span<const Register> registers() const noexcept { return registers_; }
    const Register *find(std::string_view name) const noexcept;
    /// Throws InvalidArgument when missing.
    const Register &at(std::string_view name) const;
    Qubit qubitCount() const noexcept { return qubits_; }
    /// Qubits of the ancilla register, empty when there is none.
    std::vector<Qubit> ancillaQubits() const;

    /// Copy with the ancilla register (which must be last) resized.
    RegisterLayout withAncillaWidth(Qubit width) const;

    friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;

  private:
    std::vector<Register> registers_;
    Qubit qubits_ = 0;
};

enum class CircuitLevel { Composite, Elementary };

class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}
    Circuit(RegisterLayout layout, std::vector<Gate> gates);

    const RegisterLayout &layout() const noexcept { return layout_; }
    std::span<const Gate> gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    Qubit qubitCount() const noexcept { return layout_.qubitCount(); }

    /// Validates the gate and its qubit range.
    void append(Gate g);
    void append(std::span<const Gate> gates);

    CircuitLevel level() const noexcept;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
};

Circuit compose(const Circuit &a, const Circuit &b);
Circuit inverse(const Circuit &c);

inline constexpr Qubit kDefaultUnitaryQubitCap = 14;

/// Dense matrix of the circuit, with column j the image of basis state j.
Eigen::MatrixXcd toUnitary(const Circuit &c, Qubit maxQubits = kDefaultUnitaryQubitCap);

/// Applies the circuit to each column of `columns` (a 2^q x k block of input
/// states) and returns the images. toUnitary is the identity-input case.
Eigen::MatrixXcd applyToColumns(const Circuit &c, Eigen::MatrixXcd columns,
                                Qubit maxQubits = kDefaultUnitaryQubitCap);

/// Number of CX, CZ and CPHASE gates. Throws InvalidArgument on composite input.
std::size_t countTwoQubitGates(const Circuit &c);

std::string serialize(const Circuit &c);
/// Throws ParseError carrying the 1-based line number.
Circuit parse(std::string_view text);

std::string kindName(GateKind kind);
std::string formatAngle(double theta);

} // namespace qwalk
