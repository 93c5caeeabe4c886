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

#include "qwalk/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qwalk/error.hpp"

namespace qwalk {

BaseOp Gate::base() const noexcept {
    switch (kind) {
    case GateKind::H:
        return BaseOp::H;
    case GateKind::X:
    case GateKind::CX:
    case GateKind::Toffoli:
    case GateKind::MCX:
        return BaseOp::X;
    case GateKind::Z:
    case GateKind::CZ:
        return BaseOp::Z;
    case GateKind::Phase:
    case GateKind::CPhase:
        return BaseOp::Phase;
    case GateKind::GlobalPhase:
        return BaseOp::GlobalPhase;
    }
    return BaseOp::X;
}

bool Gate::isElementary() const noexcept {
    switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z:
    case GateKind::Phase:
    case GateKind::GlobalPhase:
        return controls.empty();
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CPhase:
        return controls.size() == 1 && controls.front().positive();
    case GateKind::Toffoli:
    case GateKind::MCX:
        return false;
    }
    return false;
}

bool Gate::isTwoQubit() const noexcept {
    return isElementary() &&
           (kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::CPhase);
}

std::vector<Qubit> Gate::qubits() const {
    std::vector<Qubit> out;
    out.reserve(controls.size() + targets.size());
    for (const auto &c : controls) {
        out.push_back(c.qubit);
    }
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

void validate(const Gate &g) {
    const std::size_t wantTargets = g.kind == GateKind::GlobalPhase ? 0 : 1;
    if (g.targets.size() != wantTargets) {
        throw InvalidArgument(kindName(g.kind) + " takes " + std::to_string(wantTargets) +
                              " target(s), got " + std::to_string(g.targets.size()));
    }
    std::size_t wantControls = 0;
    switch (g.kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CPhase:
        wantControls = 1;
        break;
    case GateKind::Toffoli:
        wantControls = 2;
        break;
    default:
        wantControls = g.controls.size();
    }
    if (g.controls.size() != wantControls) {
        throw InvalidArgument(kindName(g.kind) + " takes " + std::to_string(wantControls) +
                              " control(s), got " + std::to_string(g.controls.size()));
    }
    auto qs = g.qubits();
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw InvalidArgument(kindName(g.kind) + " uses a qubit twice");
    }
    if (!std::isfinite(g.angle)) {
        throw InvalidArgument("non-finite gate angle");
    }
}

Gate addControl(const Gate &g, Control c) {
    Gate out = g;
    out.controls.push_back(c);
    const std::size_t n = out.controls.size();
    switch (g.base()) {
    case BaseOp::X:
        out.kind = n == 1 ? GateKind::CX : n == 2 ? GateKind::Toffoli : GateKind::MCX;
        break;
    case BaseOp::Z:
        out.kind = n == 1 ? GateKind::CZ : GateKind::Z;
        break;
    case BaseOp::Phase:
        out.kind = n == 1 ? GateKind::CPhase : GateKind::Phase;
        break;
    case BaseOp::H:
    case BaseOp::GlobalPhase:
        break;
    }
    return out;
}

Gate inverse(const Gate &g) {
    Gate out = g;
    if (g.base() == BaseOp::Phase || g.base() == BaseOp::GlobalPhase) {
        out.angle = -g.angle;
    }
    return out;
}

std::vector<Qubit> Register::qubits() const {
    std::vector<Qubit> out(width);
    for (Qubit i = 0; i < width; ++i) {
        out[i] = offset + i;
    }
    return out;
}

const Register &RegisterLayout::add(std::string name, Qubit width) {
    if (name.empty() || name.find_first_of(" \t#") != std::string::npos) {
        throw InvalidArgument("invalid register name '" + name + "'");
    }
    if (find(name) != nullptr) {
        throw InvalidArgument("duplicate register '" + name + "'");
    }
    registers_.push_back(Register{std::move(name), qubits_, width});
    qubits_ += width;
    return registers_.back();
}

const Register *RegisterLayout::find(std::string_view name) const noexcept {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

const Register &RegisterLayout::at(std::string_view name) const {
    if (const Register *r = find(name)) {
        return *r;
    }
    throw InvalidArgument("layout has no register '" + std::string(name) + "'");
}

std::vector<Qubit> RegisterLayout::ancillaQubits() const {
    const Register *r = find(kAncillaRegister);
    return r ? r->qubits() : std::vector<Qubit>{};
}

RegisterLayout RegisterLayout::withAncillaWidth(Qubit width) const {
    if (registers_.empty() || registers_.back().name != kAncillaRegister) {
        throw InvalidArgument("ancilla register must be the last register");
    }
    RegisterLayout out = *this;
    out.qubits_ = out.qubits_ - out.registers_.back().width + width;
    out.registers_.back().width = width;
    return out;
}

Circuit::Circuit(RegisterLayout layout, std::vector<Gate> gates) : layout_(std::move(layout)) {
    gates_.reserve(gates.size());
    for (auto &g : gates) {
        append(std::move(g));
    }
}

void Circuit::append(Gate g) {
    validate(g);
    for (Qubit q : g.qubits()) {
        if (q >= layout_.qubitCount()) {
            throw InvalidArgument("qubit q" + std::to_string(q) + " outside a " +
                                  std::to_string(layout_.qubitCount()) + "-qubit layout");
        }
    }
    gates_.push_back(std::move(g));
}

void Circuit::append(std::span<const Gate> gates) {
    for (const auto &g : gates) {
        append(g);
    }
}

CircuitLevel Circuit::level() const noexcept {
    return std::all_of(gates_.begin(), gates_.end(),
                       [](const Gate &g) { return g.isElementary(); })
               ? CircuitLevel::Elementary
               : CircuitLevel::Composite;
}

Circuit compose(const Circuit &a, const Circuit &b) {
    if (!(a.layout() == b.layout())) {
        throw InvalidArgument("cannot compose circuits with different layouts");
    }
    Circuit out = a;
    out.append(b.gates());
    return out;
}

Circuit inverse(const Circuit &c) {
    Circuit out(c.layout());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        out.append(inverse(*it));
    }
    return out;
}

namespace {

using RowMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Matrix2cd baseMatrix(const Gate &g) {
    using namespace std::complex_literals;
    Eigen::Matrix2cd u;
    switch (g.base()) {
    case BaseOp::H:
        u << 1, 1, 1, -1;
        u /= std::numbers::sqrt2;
        break;
    case BaseOp::X:
        u << 0, 1, 1, 0;
        break;
    case BaseOp::Z:
        u << 1, 0, 0, -1;
        break;
    case BaseOp::Phase:
        u << 1, 0, 0, std::exp(1i * g.angle);
        break;
    case BaseOp::GlobalPhase:
        u = std::exp(1i * g.angle) * Eigen::Matrix2cd::Identity();
        break;
    }
    return u;
}

} // namespace

Eigen::MatrixXcd applyToColumns(const Circuit &c, Eigen::MatrixXcd columns, Qubit maxQubits) {
    const Qubit q = c.qubitCount();
    if (q > maxQubits) {
        throw InvalidArgument("circuit has " + std::to_string(q) +
                              " qubits, unitary reconstruction is capped at " +
                              std::to_string(maxQubits));
    }
    const std::size_t dim = std::size_t{1} << q;
    if (static_cast<std::size_t>(columns.rows()) != dim) {
        throw InvalidArgument("input block must have 2^q rows");
    }

    // Row i of G*M only involves rows i and i ^ (target bit) of M, with
    // coefficients read off the gate's 2x2 matrix.
    RowMatrix m = columns;
    RowMatrix next(m.rows(), m.cols());
    for (const Gate &g : c.gates()) {
        std::size_t mask = 0;
        std::size_t want = 0;
        for (const auto &ctl : g.controls) {
            mask |= std::size_t{1} << ctl.qubit;
            if (ctl.positive()) {
                want |= std::size_t{1} << ctl.qubit;
            }
        }
        const Eigen::Matrix2cd u = baseMatrix(g);
        const bool global = g.base() == BaseOp::GlobalPhase;
        const std::size_t tbit = global ? 0 : std::size_t{1} << g.targets.front();
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & mask) != want) {
                next.row(i) = m.row(i);
            } else if (global) {
                next.row(i) = u(0, 0) * m.row(i);
            } else {
                const int bi = (i & tbit) ? 1 : 0;
                next.row(i) = u(bi, 0) * m.row(i & ~tbit) + u(bi, 1) * m.row(i | tbit);
            }
        }
        m.swap(next);
    }
    return m;
}

Eigen::MatrixXcd toUnitary(const Circuit &c, Qubit maxQubits) {
    if (c.qubitCount() > maxQubits) {
        throw InvalidArgument("circuit has " + std::to_string(c.qubitCount()) +
                              " qubits, unitary reconstruction is capped at " +
                              std::to_string(maxQubits));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.qubitCount());
    return applyToColumns(c, Eigen::MatrixXcd::Identity(dim, dim), maxQubits);
}

std::size_t countTwoQubitGates(const Circuit &c) {
    std::size_t count = 0;
    for (const Gate &g : c.gates()) {
        if (!g.isElementary()) {
            throw InvalidArgument("countTwoQubitGates needs an elementary circuit, found " +
                                  kindName(g.kind) + " with " +
                                  std::to_string(g.controls.size()) + " control(s)");
        }
        count += g.isTwoQubit() ? 1 : 0;
    }
    return count;
}

std::string kindName(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "h";
    case GateKind::X:
        return "x";
    case GateKind::Z:
        return "z";
    case GateKind::Phase:
        return "phase";
    case GateKind::CX:
        return "cx";
    case GateKind::CZ:
        return "cz";
    case GateKind::CPhase:
        return "cphase";
    case GateKind::Toffoli:
        return "toffoli";
    case GateKind::MCX:
        return "mcx";
    case GateKind::GlobalPhase:
        return "gphase";
    }
    return "?";
}

} // namespace qwalk
