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

#include "qwalk/compiler.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

Gate xWithControls(std::vector<Control> controls, Qubit target) {
    Gate g = Gate::x(target);
    for (const auto &c : controls) {
        g = addControl(g, c);
    }
    return g;
}

void requireAncilla(std::span<const Qubit> ancilla, std::size_t need, const char *what) {
    if (ancilla.size() < need) {
        throw AncillaBudgetExceeded(std::string(what) + " needs " + std::to_string(need) +
                                    " clean ancilla(s), " + std::to_string(ancilla.size()) +
                                    " available");
    }
}

void requireDistinct(std::vector<Qubit> qs, const char *what) {
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw InvalidArgument(std::string(what) + ": qubits must be distinct");
    }
}

// Positive controls only from here down.

// `relative`: the result is MCX times a diagonal phase on controls and target,
// for flags that are uncomputed by the inverse list.
void appendMCX(std::span<const Qubit> controls, Qubit target, std::span<const Qubit> anc,
               GateList &out, bool relative = false) {
    const std::size_t n = controls.size();
    if (n == 0) {
        out.push_back(Gate::x(target));
        return;
    }
    if (n == 1) {
        out.push_back(Gate::cx(controls[0], target));
        return;
    }
    auto apex = [&](Qubit a, Qubit b) {
        const GateList g = relative ? relativeToffoliGates(a, b, target) : toffoliGates(a, b, target);
        out.insert(out.end(), g.begin(), g.end());
    };
    if (n == 2) {
        apex(controls[0], controls[1]);
        return;
    }
    requireAncilla(anc, n - 2, "multi-controlled NOT");
    // anc[i] = controls[0] & ... & controls[i + 1]
    GateList chain = relativeToffoliGates(controls[0], controls[1], anc[0]);
    for (std::size_t i = 1; i + 2 < n; ++i) {
        auto t = relativeToffoliGates(controls[i + 1], anc[i - 1], anc[i]);
        chain.insert(chain.end(), t.begin(), t.end());
    }
    out.insert(out.end(), chain.begin(), chain.end());
    apex(controls[n - 1], anc[n - 3]);
    const GateList undo = inverseGates(chain);
    out.insert(out.end(), undo.begin(), undo.end());
}

void appendPhasePi(std::span<const Qubit> pattern, std::span<const Qubit> anc, GateList &out) {
    const std::size_t n = pattern.size();
    if (n == 1) {
        out.push_back(Gate::z(pattern[0]));
        return;
    }
    if (n == 2) {
        out.push_back(Gate::cz(pattern[0], pattern[1]));
        return;
    }
    const Qubit t = pattern[n - 1];
    out.push_back(Gate::h(t));
    appendMCX(pattern.first(n - 1), t, anc, out);
    out.push_back(Gate::h(t));
}

void lowerPositive(const Gate &g, std::span<const Qubit> free, GateList &out);

// Computes AND(controls) into free[0], runs `core` on it, uncomputes.
template <typename Core>
void viaConjunction(std::span<const Qubit> controls, std::span<const Qubit> free, GateList &out,
                    Core core) {
    requireAncilla(free, 1, "multi-controlled gate");
    const Qubit flag = free[0];
    GateList compute;
    appendMCX(controls, flag, free.subspan(1), compute, true);
    out.insert(out.end(), compute.begin(), compute.end());
    core(flag);
    const GateList undo = inverseGates(compute);
    out.insert(out.end(), undo.begin(), undo.end());
}

void lowerPositive(const Gate &g, std::span<const Qubit> free, GateList &out) {
    std::vector<Qubit> controls;
    for (const auto &c : g.controls) {
        controls.push_back(c.qubit);
    }
    const std::size_t n = controls.size();
    switch (g.base()) {
    case BaseOp::X:
        appendMCX(controls, g.targets[0], free, out);
        return;
    case BaseOp::Z: {
        controls.push_back(g.targets[0]);
        appendPhasePi(controls, free, out);
        return;
    }
    case BaseOp::Phase:
        if (n == 0) {
            out.push_back(Gate::phase(g.targets[0], g.angle));
        } else if (n == 1) {
            out.push_back(Gate::cphase(controls[0], g.targets[0], g.angle));
        } else {
            viaConjunction(controls, free, out, [&](Qubit flag) {
                out.push_back(Gate::cphase(flag, g.targets[0], g.angle));
            });
        }
        return;
    case BaseOp::GlobalPhase: {
        if (n == 0) {
            out.push_back(Gate::globalPhase(g.angle));
            return;
        }
        // A controlled global phase is a phase on the last control.
        Gate p = Gate::phase(controls.back(), g.angle);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            p = addControl(p, pos(controls[i]));
        }
        lowerPositive(p, free, out);
        return;
    }
    case BaseOp::H:
        if (n == 0) {
            out.push_back(Gate::h(g.targets[0]));
        } else if (n == 1) {
            auto ch = controlledHGates(controls[0], g.targets[0]);
            out.insert(out.end(), ch.begin(), ch.end());
        } else {
            viaConjunction(controls, free, out, [&](Qubit flag) {
                auto ch = controlledHGates(flag, g.targets[0]);
                out.insert(out.end(), ch.begin(), ch.end());
            });
        }
        return;
    }
}

void lowerGate(const Gate &g, std::span<const Qubit> free, GateList &out) {
    if (g.isElementary()) {
        out.push_back(g);
        return;
    }
    Gate positive = g;
    for (auto &c : positive.controls) {
        if (!c.positive()) {
            out.push_back(Gate::x(c.qubit));
            c.polarity = Polarity::Positive;
        }
    }
    lowerPositive(positive, free, out);
    for (const auto &c : g.controls) {
        if (!c.positive()) {
            out.push_back(Gate::x(c.qubit));
        }
    }
}

std::vector<Qubit> qubitsOf(std::span<const Control> controls) {
    std::vector<Qubit> out;
    for (const auto &c : controls) {
        out.push_back(c.qubit);
    }
    return out;
}

RegisterLayout singleRegister(unsigned k, unsigned ancilla) {
    RegisterLayout layout;
    layout.add("q", k);
    if (ancilla > 0) {
        layout.add(std::string(kAncillaRegister), ancilla);
    }
    return layout;
}

std::vector<Control> matchPattern(std::span<const Qubit> qubits, std::uint64_t value) {
    std::vector<Control> out;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        out.push_back((value >> i) & 1U ? pos(qubits[i]) : neg(qubits[i]));
    }
    return out;
}

void append(GateList &out, const GateList &more) { out.insert(out.end(), more.begin(), more.end()); }

// flag ^= AND(pattern), up to a diagonal phase; undo with inverseGates.
GateList flagGates(std::span<const Control> pattern, Qubit flag, std::span<const Qubit> anc) {
    GateList out;
    for (const auto &c : pattern) {
        if (!c.positive()) {
            out.push_back(Gate::x(c.qubit));
        }
    }
    appendMCX(qubitsOf(pattern), flag, anc, out, true);
    for (const auto &c : pattern) {
        if (!c.positive()) {
            out.push_back(Gate::x(c.qubit));
        }
    }
    return out;
}

} // namespace

GateList toffoliGates(Qubit a, Qubit b, Qubit t) {
    const double T = kPi / 4;
    return {Gate::h(t),         Gate::cx(b, t),      Gate::phase(t, -T), Gate::cx(a, t),
            Gate::phase(t, T),  Gate::cx(b, t),      Gate::phase(t, -T), Gate::cx(a, t),
            Gate::phase(b, T),  Gate::phase(t, T),   Gate::h(t),         Gate::cx(a, b),
            Gate::phase(a, T),  Gate::phase(b, -T),  Gate::cx(a, b)};
}

GateList relativeToffoliGates(Qubit a, Qubit b, Qubit t) {
    const double T = kPi / 4;
    return {Gate::h(t),         Gate::phase(t, T), Gate::cx(b, t),     Gate::phase(t, -T),
            Gate::cx(a, t),     Gate::phase(t, T), Gate::cx(b, t),     Gate::phase(t, -T),
            Gate::h(t)};
}

GateList inverseGates(std::span<const Gate> gates) {
    GateList out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.push_back(inverse(*it));
    }
    return out;
}

GateList controlledHGates(Qubit c, Qubit t) {
    const double S = kPi / 2;
    const double T = kPi / 4;
    return {Gate::phase(t, S),  Gate::h(t), Gate::phase(t, T), Gate::cx(c, t),
            Gate::phase(t, -T), Gate::h(t), Gate::phase(t, -S)};
}

GateList groverGates(std::span<const Qubit> reg) {
    if (reg.empty()) {
        throw InvalidArgument("Grover operator needs at least one qubit");
    }
    // G = -(H X C^{k-1}Z X H)
    GateList out;
    for (Qubit q : reg) {
        out.push_back(Gate::h(q));
    }
    for (Qubit q : reg) {
        out.push_back(Gate::x(q));
    }
    Gate core = Gate::z(reg.back());
    for (std::size_t i = 0; i + 1 < reg.size(); ++i) {
        core = addControl(core, pos(reg[i]));
    }
    out.push_back(core);
    for (Qubit q : reg) {
        out.push_back(Gate::x(q));
    }
    for (Qubit q : reg) {
        out.push_back(Gate::h(q));
    }
    out.push_back(Gate::globalPhase(kPi));
    return out;
}

GateList incrementGates(std::span<const Qubit> reg) {
    if (reg.empty()) {
        throw InvalidArgument("increment needs at least one qubit");
    }
    // Flip bit i when every lower bit is 1, highest bit first.
    GateList out;
    for (std::size_t i = reg.size(); i-- > 0;) {
        std::vector<Control> controls;
        for (std::size_t j = 0; j < i; ++j) {
            controls.push_back(pos(reg[j]));
        }
        out.push_back(xWithControls(std::move(controls), reg[i]));
    }
    return out;
}

GateList decrementGates(std::span<const Qubit> reg) {
    GateList inc = incrementGates(reg);
    std::reverse(inc.begin(), inc.end());
    return inc;
}

GateList mcxGates(std::span<const Control> controls, Qubit target, std::span<const Qubit> ancilla) {
    auto all = qubitsOf(controls);
    all.push_back(target);
    all.insert(all.end(), ancilla.begin(), ancilla.end());
    requireDistinct(all, "mcx");
    GateList out;
    lowerGate(xWithControls({controls.begin(), controls.end()}, target), ancilla, out);
    return out;
}

GateList phasePiGates(std::span<const Control> pattern, std::span<const Qubit> ancilla) {
    if (pattern.empty()) {
        throw InvalidArgument("phase pattern must not be empty");
    }
    auto all = qubitsOf(pattern);
    all.insert(all.end(), ancilla.begin(), ancilla.end());
    requireDistinct(all, "controlled pi");
    Gate z = Gate::z(pattern.back().qubit);
    for (std::size_t i = 0; i + 1 < pattern.size(); ++i) {
        z = addControl(z, pattern[i]);
    }
    // A negative final qubit: conjugate it with X so Z hits the |0> branch.
    GateList out;
    const bool flipLast = !pattern.back().positive();
    if (flipLast) {
        out.push_back(Gate::x(pattern.back().qubit));
    }
    lowerGate(z, ancilla, out);
    if (flipLast) {
        out.push_back(Gate::x(pattern.back().qubit));
    }
    return out;
}

GateList controlledGates(std::span<const Gate> body, std::span<const Control> pattern,
                         std::span<const Qubit> ancilla) {
    const auto patternQubits = qubitsOf(pattern);
    for (const Gate &g : body) {
        for (Qubit q : g.qubits()) {
            if (std::find(patternQubits.begin(), patternQubits.end(), q) != patternQubits.end()) {
                throw InvalidArgument("controlled body touches a pattern qubit");
            }
        }
    }
    if (pattern.empty()) {
        return {body.begin(), body.end()};
    }
    GateList out;
    if (pattern.size() == 1) {
        for (const Gate &g : body) {
            out.push_back(addControl(g, pattern[0]));
        }
        return out;
    }
    requireAncilla(ancilla, 1, "controlled body");
    const Qubit flag = ancilla[0];
    auto all = patternQubits;
    all.insert(all.end(), ancilla.begin(), ancilla.end());
    requireDistinct(all, "controlled body");
    const GateList compute = flagGates(pattern, flag, ancilla.subspan(1));
    append(out, compute);
    for (const Gate &g : body) {
        out.push_back(addControl(g, pos(flag)));
    }
    append(out, inverseGates(compute));
    return out;
}

Circuit buildGrover(unsigned k) {
    RegisterLayout layout = singleRegister(k, k >= 4 ? k - 3 : 0);
    const auto reg = layout.at("q").qubits();
    return lower(Circuit(layout, groverGates(reg)));
}

Circuit buildIncrement(unsigned k) {
    RegisterLayout layout = singleRegister(k, k >= 4 ? k - 3 : 0);
    const auto reg = layout.at("q").qubits();
    return Circuit(layout, incrementGates(reg));
}

Circuit buildDecrement(unsigned k) { return inverse(buildIncrement(k)); }

Circuit buildMCX(const RegisterLayout &layout, std::span<const Control> controls, Qubit target,
                 std::span<const Qubit> ancilla) {
    return Circuit(layout, mcxGates(controls, target, ancilla));
}

Circuit buildControlledPhasePi(const RegisterLayout &layout, std::span<const Control> pattern,
                               std::span<const Qubit> ancilla) {
    return Circuit(layout, phasePiGates(pattern, ancilla));
}

Circuit buildControlled(const Circuit &body, std::span<const Control> pattern,
                        std::span<const Qubit> ancilla) {
    return Circuit(body.layout(), controlledGates(body.gates(), pattern, ancilla));
}

bool isCompilable(const FamilySpec &spec) {
    if (spec.family() == Family::Hypercube) {
        return spec.n() >= 2 && std::has_single_bit(spec.n());
    }
    return true;
}

namespace {

RegisterLayout baseLayout(const FamilySpec &spec, Qubit ancilla) {
    RegisterLayout layout;
    switch (spec.family()) {
    case Family::Hypercube:
        layout.add("node", spec.n());
        layout.add("subnode", static_cast<Qubit>(std::countr_zero(spec.n())));
        break;
    case Family::CompleteSelfLoop:
        layout.add("node", spec.n());
        layout.add("subnode", spec.n());
        break;
    case Family::TwistedToroid:
        layout.add("y", spec.m());
        layout.add("x", spec.n());
        layout.add("subnode", 2);
        break;
    }
    layout.add(std::string(kAncillaRegister), ancilla);
    return layout;
}

std::vector<Qubit> nodeQubits(const RegisterLayout &layout) {
    // Node registers are the leading ones, so the node index is read off
    // qubits 0 .. nodeBits-1 directly.
    std::vector<Qubit> out;
    for (const auto &r : layout.registers()) {
        if (r.name == "subnode") {
            break;
        }
        auto qs = r.qubits();
        out.insert(out.end(), qs.begin(), qs.end());
    }
    return out;
}

GateList coinStage(NodeId marked, const RegisterLayout &layout) {
    const auto node = nodeQubits(layout);
    const auto sub = layout.at("subnode").qubits();
    const auto anc = layout.ancillaQubits();

    // G = -H X R X H with R = -1 on |1..1>. Cancelling R on the marked node
    // leaves -I there, so only R is conditioned.
    GateList out;
    for (Qubit q : sub) {
        out.push_back(Gate::h(q));
        out.push_back(Gate::x(q));
    }
    std::vector<Control> ones;
    for (Qubit q : sub) {
        ones.push_back(pos(q));
    }
    append(out, phasePiGates(ones, anc));
    auto atMarked = matchPattern(node, marked);
    atMarked.insert(atMarked.begin(), ones.begin(), ones.end());
    append(out, phasePiGates(atMarked, anc));
    for (Qubit q : sub) {
        out.push_back(Gate::x(q));
        out.push_back(Gate::h(q));
    }
    out.push_back(Gate::globalPhase(kPi));
    return out;
}

GateList hypercubeShift(const RegisterLayout &layout) {
    const auto node = layout.at("node").qubits();
    const auto sub = layout.at("subnode").qubits();
    GateList out;
    if (sub.size() < 3) {
        for (std::uint64_t a = 0; a < node.size(); ++a) {
            out.push_back(xWithControls(matchPattern(sub, a), node[a]));
        }
        return out;
    }
    // Decode the subnode into a one-hot ancilla register: linear cost instead
    // of one multi-controlled X per direction.
    const auto anc = layout.ancillaQubits();
    requireAncilla(anc, node.size(), "hypercube shift");
    GateList decode{Gate::cx(sub[0], anc[1]), Gate::x(anc[0]), Gate::cx(sub[0], anc[0])};
    for (std::size_t j = 1; j < sub.size(); ++j) {
        const std::size_t half = std::size_t{1} << j;
        for (std::size_t i = 0; i < half; ++i) {
            append(decode, relativeToffoliGates(sub[j], anc[i], anc[i + half]));
            decode.push_back(Gate::cx(anc[i + half], anc[i]));
        }
    }
    append(out, decode);
    for (std::size_t a = 0; a < node.size(); ++a) {
        out.push_back(Gate::cx(anc[a], node[a]));
    }
    append(out, inverseGates(decode));
    return out;
}

GateList completeShift(const RegisterLayout &layout) {
    const auto node = layout.at("node").qubits();
    const auto sub = layout.at("subnode").qubits();
    GateList out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(Gate::cx(node[i], sub[i]));
        out.push_back(Gate::cx(sub[i], node[i]));
        out.push_back(Gate::cx(node[i], sub[i]));
    }
    return out;
}

GateList toroidShift(const RegisterLayout &layout) {
    const auto x = layout.at("x").qubits();
    const auto y = layout.at("y").qubits();
    const auto sub = layout.at("subnode").qubits();
    const auto anc = layout.ancillaQubits();

    auto coin = [&](SubnodeId label) { return matchPattern(sub, label); };
    auto withRegister = [](std::vector<Control> pattern, std::span<const Qubit> reg, bool ones) {
        for (Qubit q : reg) {
            pattern.push_back(ones ? pos(q) : neg(q));
        }
        return pattern;
    };

    GateList out;
    // Move along the coin's axis. After an increment the register reads all
    // zeros iff it wrapped; after a decrement, all ones. A wrap shifts the
    // other coordinate the opposite way (the twist).
    struct Move {
        SubnodeId label;
        const std::vector<Qubit> &moved;
        const std::vector<Qubit> &other;
        bool forward;
    };
    const Move moves[] = {
        {toroid_coin::kPlusX, x, y, true},
        {toroid_coin::kMinusX, x, y, false},
        {toroid_coin::kPlusY, y, x, true},
        {toroid_coin::kMinusY, y, x, false},
    };
    for (const Move &mv : moves) {
        const auto pattern = coin(mv.label);
        const GateList step = mv.forward ? incrementGates(mv.moved) : decrementGates(mv.moved);
        append(out, controlledGates(step, pattern, anc));
        const GateList twist = mv.forward ? decrementGates(mv.other) : incrementGates(mv.other);
        append(out, controlledGates(twist, withRegister(pattern, mv.moved, !mv.forward), anc));
    }
    // Flip-flop relabeling: arrive on the reversed direction.
    out.push_back(Gate::x(sub[0]));
    return out;
}

GateList stepGates(const FamilySpec &spec, NodeId marked, const RegisterLayout &layout) {
    GateList out = coinStage(marked, layout);
    switch (spec.family()) {
    case Family::Hypercube:
        append(out, hypercubeShift(layout));
        break;
    case Family::CompleteSelfLoop:
        append(out, completeShift(layout));
        break;
    case Family::TwistedToroid:
        append(out, toroidShift(layout));
        break;
    }
    return out;
}

Qubit highestAncillaUsed(const GateList &gates, const RegisterLayout &layout) {
    const Register &anc = layout.at(kAncillaRegister);
    Qubit used = 0;
    for (const Gate &g : gates) {
        for (Qubit q : g.qubits()) {
            if (q >= anc.offset) {
                used = std::max(used, q - anc.offset + 1);
            }
        }
    }
    return used;
}

} // namespace

StepCircuitPlan planStep(const FamilySpec &spec, NodeId marked) {
    if (!isCompilable(spec)) {
        throw NotCompilable(spec.str() +
                            " has no step circuit (hypercube dimension must be a power of two "
                            ">= 2)");
    }
    if (marked >= spec.nodeCount()) {
        throw InvalidArgument("marked node out of range for " + spec.str());
    }
    // Build against a generous pool, then keep only what lowering touches.
    const RegisterLayout probe = baseLayout(spec, spec.nodeBits() + 8);
    const Circuit lowered = lower(Circuit(probe, stepGates(spec, marked, probe)));
    const Qubit used = highestAncillaUsed({lowered.gates().begin(), lowered.gates().end()}, probe);
    return {spec, marked, baseLayout(spec, used), used};
}

Circuit buildStepCircuit(const FamilySpec &spec, NodeId marked) {
    const StepCircuitPlan plan = planStep(spec, marked);
    return Circuit(plan.layout, stepGates(spec, marked, plan.layout));
}

Circuit lower(const Circuit &c) {
    const auto pool = c.layout().ancillaQubits();
    Circuit out(c.layout());
    GateList buffer;
    for (const Gate &g : c.gates()) {
        if (g.isElementary()) {
            out.append(g);
            continue;
        }
        const auto touched = g.qubits();
        std::vector<Qubit> free;
        for (Qubit q : pool) {
            if (std::find(touched.begin(), touched.end(), q) == touched.end()) {
                free.push_back(q);
            }
        }
        buffer.clear();
        lowerGate(g, free, buffer);
        out.append(buffer);
    }
    return out;
}

} // namespace qwalk
