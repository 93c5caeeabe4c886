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
 * Graph families searched by the walk: the n-dimensional hypercube, the
 * complete graph with self loops on 2^n nodes, and the twisted toroid on a
 * 2^n x 2^m grid.
 *
 * Every vertex of degree d is split into d subnodes (coin positions). The
 * neighbor function maps a (node, subnode) pair across its edge and is an
 * involution for all three families, so the shift operator built from it
 * squares to the identity.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qwalk {

using NodeId = std::uint64_t;
using SubnodeId = std::uint64_t;

enum class Family { Hypercube, CompleteSelfLoop, TwistedToroid };

/// A (node, subnode) pair of the extended position space.
struct Site {
    NodeId node = 0;
    SubnodeId subnode = 0;

    friend bool operator==(const Site &, const Site &) = default;
};

/// Toroid coin labels. Bit 0 is the sign, bit 1 the axis.
namespace toroid_coin {
inline constexpr SubnodeId kPlusX = 0;
inline constexpr SubnodeId kMinusX = 1;
inline constexpr SubnodeId kPlusY = 2;
inline constexpr SubnodeId kMinusY = 3;
} // namespace toroid_coin

/// Largest exponents accepted by the factories. They keep
/// nodeCount * degree representable in 64 bits.
inline constexpr unsigned kMaxHypercubeDimension = 56;
inline constexpr unsigned kMaxCompleteExponent = 31;
inline constexpr unsigned kMaxToroidExponentSum = 60;

class FamilySpec {
  public:
    static FamilySpec hypercube(unsigned n);
    static FamilySpec complete(unsigned n);
    static FamilySpec twistedToroid(unsigned n, unsigned m);

    /// Parses "hypercube", "complete" or "twisted_toroid".
    static Family parseFamily(std::string_view name);

    Family family() const noexcept { return family_; }
    unsigned n() const noexcept { return n_; }
    /// Second exponent; zero for the single-parameter families.
    unsigned m() const noexcept { return m_; }

    std::uint64_t nodeCount() const noexcept;
    std::uint64_t degree() const noexcept;
    /// Number of bits in the node encoding.
    unsigned nodeBits() const noexcept;

    std::string familyName() const;
    /// Human readable, e.g. "twisted_toroid(3,3)".
    std::string str() const;

    friend bool operator==(const FamilySpec &, const FamilySpec &) = default;

  private:
    FamilySpec(Family family, unsigned n, unsigned m)
        : family_(family), n_(n), m_(m) {}

    Family family_;
    unsigned n_;
    unsigned m_;
};

std::uint64_t nodeCount(const FamilySpec &spec) noexcept;
std::uint64_t degree(const FamilySpec &spec) noexcept;

/// Shift target of (v, a). Throws InvalidArgument for an out-of-range node
/// or subnode.
Site neighbor(const FamilySpec &spec, Site site);
inline Site neighbor(const FamilySpec &spec, NodeId v, SubnodeId a) {
    return neighbor(spec, Site{v, a});
}

/// Toroid grid coordinates; x occupies the high bits of the node index.
struct GridPoint {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    friend bool operator==(const GridPoint &, const GridPoint &) = default;
};

GridPoint toGrid(const FamilySpec &spec, NodeId v);
NodeId fromGrid(const FamilySpec &spec, GridPoint p);

/// Bit string of a node, most significant bit first. For the toroid this
/// is the x bits followed by the y bits.
std::string encodeNode(const FamilySpec &spec, NodeId v);
NodeId decodeNode(const FamilySpec &spec, std::string_view bits);

} // namespace qwalk
