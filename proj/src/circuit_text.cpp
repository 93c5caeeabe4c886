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

// Text form: one gate per line,
//
//   register node 4
//   cx q3 q0
//   mcx +q2 -q1 q0
//   phase(0.78539816339744828) q1
//
// The last qubit is the target (gphase has none); everything before it is a
// control, '+'/'-' giving the polarity. Bare controls are positive and are
// only emitted for cx/cz/cphase/toffoli. '#' starts a comment. A file with
// no register lines gets a single register "q".

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "qwalk/circuit.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

namespace {

bool hasAngle(GateKind k) {
    return k == GateKind::Phase || k == GateKind::CPhase || k == GateKind::GlobalPhase;
}

bool barePositiveControls(const Gate &g) {
    const bool implicitArity = g.kind == GateKind::CX || g.kind == GateKind::CZ ||
                               g.kind == GateKind::CPhase || g.kind == GateKind::Toffoli;
    if (!implicitArity) {
        return false;
    }
    for (const auto &c : g.controls) {
        if (!c.positive()) {
            return false;
        }
    }
    return true;
}

std::optional<GateKind> kindFromName(std::string_view name) {
    static constexpr std::array kinds{GateKind::H,       GateKind::X,     GateKind::Z,
                                      GateKind::Phase,   GateKind::CX,    GateKind::CZ,
                                      GateKind::CPhase,  GateKind::Toffoli, GateKind::MCX,
                                      GateKind::GlobalPhase};
    for (GateKind k : kinds) {
        if (kindName(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> splitWords(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <typename T> bool parseNumber(std::string_view s, T &out) {
    const char *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

} // namespace

std::string formatAngle(double theta) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), theta);
    return std::string(buf.data(), ptr);
}

std::string serialize(const Circuit &c) {
    std::ostringstream out;
    for (const auto &r : c.layout().registers()) {
        out << "register " << r.name << ' ' << r.width << '\n';
    }
    for (const Gate &g : c.gates()) {
        out << kindName(g.kind);
        if (hasAngle(g.kind)) {
            out << '(' << formatAngle(g.angle) << ')';
        }
        const bool bare = barePositiveControls(g);
        for (const auto &ctl : g.controls) {
            out << ' ';
            if (!bare) {
                out << (ctl.positive() ? '+' : '-');
            }
            out << 'q' << ctl.qubit;
        }
        for (Qubit t : g.targets) {
            out << " q" << t;
        }
        out << '\n';
    }
    return out.str();
}

Circuit parse(std::string_view text) {
    RegisterLayout layout;
    std::vector<std::pair<std::size_t, Gate>> gates;

    std::size_t lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineNo;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }

        // Pull out "(angle)" before splitting so spaces inside are harmless.
        std::optional<double> angle;
        std::string rest;
        if (const auto open = line.find('('); open != std::string_view::npos) {
            const auto close = line.find(')', open);
            if (close == std::string_view::npos) {
                throw ParseError(lineNo, "unterminated '('");
            }
            double value = 0.0;
            if (!parseNumber(trim(line.substr(open + 1, close - open - 1)), value)) {
                throw ParseError(lineNo, "bad angle");
            }
            angle = value;
            rest = std::string(line.substr(0, open)) + " " + std::string(line.substr(close + 1));
            line = rest;
        }

        const auto words = splitWords(line);
        if (words.front() == "register") {
            if (angle || words.size() != 3) {
                throw ParseError(lineNo, "expected 'register <name> <width>'");
            }
            if (!gates.empty()) {
                throw ParseError(lineNo, "register declared after the first gate");
            }
            Qubit width = 0;
            if (!parseNumber(words[2], width)) {
                throw ParseError(lineNo, "bad register width");
            }
            try {
                layout.add(std::string(words[1]), width);
            } catch (const InvalidArgument &e) {
                throw ParseError(lineNo, e.what());
            }
            continue;
        }

        const auto kind = kindFromName(words.front());
        if (!kind) {
            throw ParseError(lineNo, "unknown gate '" + std::string(words.front()) + "'");
        }
        if (hasAngle(*kind) != angle.has_value()) {
            throw ParseError(lineNo, hasAngle(*kind) ? "missing angle" : "unexpected angle");
        }

        Gate g;
        g.kind = *kind;
        g.angle = angle.value_or(0.0);
        std::vector<std::pair<std::optional<Polarity>, Qubit>> operands;
        for (std::size_t i = 1; i < words.size(); ++i) {
            std::string_view w = words[i];
            std::optional<Polarity> pol;
            if (w.front() == '+' || w.front() == '-') {
                pol = w.front() == '+' ? Polarity::Positive : Polarity::Negative;
                w.remove_prefix(1);
            }
            Qubit q = 0;
            if (w.size() < 2 || w.front() != 'q' || !parseNumber(w.substr(1), q)) {
                throw ParseError(lineNo, "bad qubit '" + std::string(words[i]) + "'");
            }
            operands.emplace_back(pol, q);
        }
        const std::size_t nTargets = *kind == GateKind::GlobalPhase ? 0 : 1;
        if (operands.size() < nTargets) {
            throw ParseError(lineNo, "missing target");
        }
        const std::size_t nControls = operands.size() - nTargets;
        for (std::size_t i = 0; i < operands.size(); ++i) {
            const auto &[pol, q] = operands[i];
            if (i < nControls) {
                g.controls.push_back({q, pol.value_or(Polarity::Positive)});
            } else if (pol) {
                throw ParseError(lineNo, "target qubit cannot carry a polarity");
            } else {
                g.targets.push_back(q);
            }
        }
        gates.emplace_back(lineNo, std::move(g));
    }

    // Without declarations the file describes one register "q" wide enough
    // for every qubit it mentions.
    if (layout.registers().empty()) {
        Qubit width = 0;
        for (const auto &[line, g] : gates) {
            for (Qubit q : g.qubits()) {
                width = std::max(width, q + 1);
            }
        }
        if (width > 0) {
            layout.add("q", width);
        }
    }

    Circuit c(layout);
    for (auto &[line, g] : gates) {
        try {
            c.append(std::move(g));
        } catch (const InvalidArgument &e) {
            throw ParseError(line, e.what());
        }
    }
    return c;
}

} // namespace qwalk
