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

#include "qwalk/graphs.hpp"

#include "qwalk/error.hpp"

namespace qwalk {

FamilySpec FamilySpec::hypercube(unsigned n) {
    if (n < 1 || n > kMaxHypercubeDimension) {
        throw InvalidArgument("hypercube dimension must be in [1, " +
                              std::to_string(kMaxHypercubeDimension) + "], got " +
                              std::to_string(n));
    }
    return FamilySpec(Family::Hypercube, n, 0);
}

FamilySpec FamilySpec::complete(unsigned n) {
    if (n < 1 || n > kMaxCompleteExponent) {
        throw InvalidArgument("complete graph exponent must be in [1, " +
                              std::to_string(kMaxCompleteExponent) + "], got " +
                              std::to_string(n));
    }
    return FamilySpec(Family::CompleteSelfLoop, n, 0);
}

FamilySpec FamilySpec::twistedToroid(unsigned n, unsigned m) {
    if (n < 1 || m < 1 || n + m > kMaxToroidExponentSum) {
        throw InvalidArgument("twisted toroid exponents must be >= 1 with n + m <= " +
                              std::to_string(kMaxToroidExponentSum));
    }
    return FamilySpec(Family::TwistedToroid, n, m);
}

Family FamilySpec::parseFamily(std::string_view name) {
    if (name == "hypercube") {
        return Family::Hypercube;
    }
    if (name == "complete") {
        return Family::CompleteSelfLoop;
    }
    if (name == "twisted_toroid") {
        return Family::TwistedToroid;
    }
    throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

std::uint64_t FamilySpec::nodeCount() const noexcept {
    return std::uint64_t{1} << nodeBits();
}

std::uint64_t FamilySpec::degree() const noexcept {
    switch (family_) {
    case Family::Hypercube:
        return n_;
    case Family::CompleteSelfLoop:
        return std::uint64_t{1} << n_;
    case Family::TwistedToroid:
        return 4;
    }
    return 0;
}

unsigned FamilySpec::nodeBits() const noexcept {
    return family_ == Family::TwistedToroid ? n_ + m_ : n_;
}

std::string FamilySpec::familyName() const {
    switch (family_) {
    case Family::Hypercube:
        return "hypercube";
    case Family::CompleteSelfLoop:
        return "complete";
    case Family::TwistedToroid:
        return "twisted_toroid";
    }
    return {};
}

std::string FamilySpec::str() const {
    std::string out = familyName() + "(" + std::to_string(n_);
    if (family_ == Family::TwistedToroid) {
        out += "," + std::to_string(m_);
    }
    return out + ")";
}

std::uint64_t nodeCount(const FamilySpec &spec) noexcept { return spec.nodeCount(); }
std::uint64_t degree(const FamilySpec &spec) noexcept { return spec.degree(); }

GridPoint toGrid(const FamilySpec &spec, NodeId v) {
    if (spec.family() != Family::TwistedToroid) {
        throw InvalidArgument("grid coordinates only exist on the twisted toroid");
    }
    if (v >= spec.nodeCount()) {
        throw InvalidArgument("node " + std::to_string(v) + " out of range");
    }
    const std::uint64_t yMask = (std::uint64_t{1} << spec.m()) - 1;
    return {v >> spec.m(), v & yMask};
}

NodeId fromGrid(const FamilySpec &spec, GridPoint p) {
    if (spec.family() != Family::TwistedToroid) {
        throw InvalidArgument("grid coordinates only exist on the twisted toroid");
    }
    if (p.x >> spec.n() != 0 || p.y >> spec.m() != 0) {
        throw InvalidArgument("grid point out of range");
    }
    return (p.x << spec.m()) | p.y;
}

namespace {

Site toroidNeighbor(const FamilySpec &spec, Site site) {
    const std::uint64_t xs = std::uint64_t{1} << spec.n();
    const std::uint64_t ys = std::uint64_t{1} << spec.m();
    const std::uint64_t xMask = xs - 1;
    const std::uint64_t yMask = ys - 1;
    auto [x, y] = toGrid(spec, site.node);

    switch (site.subnode) {
    case toroid_coin::kPlusX:
        if (x == xMask) {
            x = 0;
            y = (y - 1) & yMask;
        } else {
            ++x;
        }
        break;
    case toroid_coin::kMinusX:
        if (x == 0) {
            x = xMask;
            y = (y + 1) & yMask;
        } else {
            --x;
        }
        break;
    case toroid_coin::kPlusY:
        if (y == yMask) {
            y = 0;
            x = (x - 1) & xMask;
        } else {
            ++y;
        }
        break;
    case toroid_coin::kMinusY:
        if (y == 0) {
            y = yMask;
            x = (x + 1) & xMask;
        } else {
            --y;
        }
        break;
    }
    // flip-flop: arrive on the reversed direction
    return {fromGrid(spec, {x, y}), site.subnode ^ 1};
}

} // namespace

Site neighbor(const FamilySpec &spec, Site site) {
    if (site.node >= spec.nodeCount()) {
        throw InvalidArgument("node " + std::to_string(site.node) + " out of range for " +
                              spec.str());
    }
    if (site.subnode >= spec.degree()) {
        throw InvalidArgument("subnode " + std::to_string(site.subnode) +
                              " out of range for " + spec.str());
    }
    switch (spec.family()) {
    case Family::Hypercube:
        return {site.node ^ (std::uint64_t{1} << site.subnode), site.subnode};
    case Family::CompleteSelfLoop:
        return {site.subnode, site.node};
    case Family::TwistedToroid:
        return toroidNeighbor(spec, site);
    }
    return site;
}

std::string encodeNode(const FamilySpec &spec, NodeId v) {
    if (v >= spec.nodeCount()) {
        throw InvalidArgument("node " + std::to_string(v) + " out of range for " +
                              spec.str());
    }
    const unsigned bits = spec.nodeBits();
    std::string out(bits, '0');
    for (unsigned i = 0; i < bits; ++i) {
        if ((v >> i) & 1U) {
            out[bits - 1 - i] = '1';
        }
    }
    return out;
}

NodeId decodeNode(const FamilySpec &spec, std::string_view bits) {
    if (bits.size() != spec.nodeBits()) {
        throw InvalidArgument("expected " + std::to_string(spec.nodeBits()) +
                              " bits, got " + std::to_string(bits.size()));
    }
    NodeId v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidArgument("bit string may only contain 0 and 1");
        }
        v = (v << 1) | static_cast<NodeId>(c == '1');
    }
    return v;
}

} // namespace qwalk
