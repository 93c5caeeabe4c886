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

#include <bit>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "qwalk/error.hpp"
#include "qwalk/graphs.hpp"

namespace qwalk {
namespace {

std::vector<FamilySpec> smallSpecs() {
    std::vector<FamilySpec> out;
    for (unsigned n = 1; n <= 6; ++n) {
        out.push_back(FamilySpec::hypercube(n));
    }
    for (unsigned n = 1; n <= 4; ++n) {
        out.push_back(FamilySpec::complete(n));
    }
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 1; m <= 4; ++m) {
            out.push_back(FamilySpec::twistedToroid(n, m));
        }
    }
    return out;
}

TEST(FamilySpec, CountsAndNames) {
    EXPECT_EQ(FamilySpec::hypercube(5).nodeCount(), 32u);
    EXPECT_EQ(FamilySpec::hypercube(5).degree(), 5u);
    EXPECT_EQ(FamilySpec::complete(3).nodeCount(), 8u);
    EXPECT_EQ(FamilySpec::complete(3).degree(), 8u);
    EXPECT_EQ(FamilySpec::twistedToroid(2, 3).nodeCount(), 32u);
    EXPECT_EQ(FamilySpec::twistedToroid(2, 3).degree(), 4u);
    EXPECT_EQ(nodeCount(FamilySpec::twistedToroid(2, 3)), 32u);
    EXPECT_EQ(degree(FamilySpec::hypercube(7)), 7u);
    EXPECT_EQ(FamilySpec::twistedToroid(3, 3).str(), "twisted_toroid(3,3)");
    EXPECT_EQ(FamilySpec::hypercube(4).str(), "hypercube(4)");
    EXPECT_EQ(FamilySpec::parseFamily("complete"), Family::CompleteSelfLoop);
    EXPECT_EQ(FamilySpec::parseFamily("twisted_toroid"), Family::TwistedToroid);
    EXPECT_THROW(FamilySpec::parseFamily("torus"), InvalidArgument);
}

TEST(FamilySpec, RejectsBadParameters) {
    EXPECT_THROW(FamilySpec::hypercube(0), InvalidArgument);
    EXPECT_THROW(FamilySpec::complete(0), InvalidArgument);
    EXPECT_THROW(FamilySpec::twistedToroid(0, 2), InvalidArgument);
    EXPECT_THROW(FamilySpec::hypercube(kMaxHypercubeDimension + 1), InvalidArgument);
    EXPECT_THROW(FamilySpec::complete(kMaxCompleteExponent + 1), InvalidArgument);
    EXPECT_THROW(FamilySpec::twistedToroid(40, 40), InvalidArgument);
}

TEST(Neighbor, DocumentedExamples) {
    EXPECT_EQ(neighbor(FamilySpec::hypercube(5), 0b00000, 2), (Site{0b00100, 2}));
    EXPECT_EQ(neighbor(FamilySpec::complete(2), 3, 3), (Site{3, 3}));
    const auto t = FamilySpec::twistedToroid(2, 2);
    const Site got = neighbor(t, fromGrid(t, {3, 2}), toroid_coin::kPlusX);
    EXPECT_EQ(toGrid(t, got.node), (GridPoint{0, 1}));
    EXPECT_EQ(got.subnode, toroid_coin::kMinusX);
}

TEST(Neighbor, OutOfRangeThrows) {
    EXPECT_THROW(neighbor(FamilySpec::hypercube(3), 8, 0), InvalidArgument);
    EXPECT_THROW(neighbor(FamilySpec::hypercube(3), 0, 3), InvalidArgument);
    EXPECT_THROW(neighbor(FamilySpec::twistedToroid(2, 2), 0, 4), InvalidArgument);
}

TEST(Neighbor, IsAnInvolution) {
    for (const auto &spec : smallSpecs()) {
        for (NodeId v = 0; v < spec.nodeCount(); ++v) {
            for (SubnodeId a = 0; a < spec.degree(); ++a) {
                ASSERT_EQ(neighbor(spec, neighbor(spec, v, a)), (Site{v, a}))
                    << spec.str() << " v=" << v << " a=" << a;
            }
        }
    }
}

TEST(Neighbor, HypercubeIsHammingAdjacency) {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto spec = FamilySpec::hypercube(n);
        for (NodeId v = 0; v < spec.nodeCount(); ++v) {
            std::set<NodeId> viaShift;
            for (SubnodeId a = 0; a < n; ++a) {
                viaShift.insert(neighbor(spec, v, a).node);
            }
            std::set<NodeId> hamming;
            for (NodeId w = 0; w < spec.nodeCount(); ++w) {
                if (std::popcount(v ^ w) == 1) {
                    hamming.insert(w);
                }
            }
            ASSERT_EQ(viaShift, hamming);
        }
    }
}

TEST(Neighbor, CompleteGraphSwapsNodeAndCoin) {
    const auto spec = FamilySpec::complete(2);
    EXPECT_EQ(neighbor(spec, 1, 3), (Site{3, 1}));
    for (NodeId v = 0; v < 4; ++v) {
        std::set<NodeId> reached;
        for (SubnodeId a = 0; a < 4; ++a) {
            reached.insert(neighbor(spec, v, a).node);
        }
        EXPECT_EQ(reached.size(), 4u);
    }
}

// Undirected edges straight from the boundary identification rule: interior
// grid edges, plus (X-1, y) ~ (0, y-1) along x and (x, Y-1) ~ (x-1, 0) along y.
std::map<std::pair<NodeId, SubnodeId>, std::pair<NodeId, SubnodeId>>
bruteForceToroid(unsigned n, unsigned m) {
    const NodeId X = NodeId{1} << n;
    const NodeId Y = NodeId{1} << m;
    const auto idx = [Y](NodeId x, NodeId y) { return x * Y + y; };
    std::map<std::pair<NodeId, SubnodeId>, std::pair<NodeId, SubnodeId>> e;
    for (NodeId x = 0; x < X; ++x) {
        for (NodeId y = 0; y < Y; ++y) {
            const NodeId a = idx(x, y);
            const NodeId bx = x + 1 < X ? idx(x + 1, y) : idx(0, (y + Y - 1) % Y);
            e[{a, 0}] = {bx, 1};
            e[{bx, 1}] = {a, 0};
            const NodeId by = y + 1 < Y ? idx(x, y + 1) : idx((x + X - 1) % X, 0);
            e[{a, 2}] = {by, 3};
            e[{by, 3}] = {a, 2};
        }
    }
    return e;
}

TEST(Neighbor, ToroidMatchesBruteForceEdgeList) {
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            const auto spec = FamilySpec::twistedToroid(n, m);
            const auto edges = bruteForceToroid(n, m);
            ASSERT_EQ(edges.size(), spec.nodeCount() * 4);
            for (const auto &[from, to] : edges) {
                const Site got = neighbor(spec, from.first, from.second);
                ASSERT_EQ(got, (Site{to.first, to.second}))
                    << spec.str() << " from " << from.first << "," << from.second;
            }
        }
    }
}

TEST(Neighbor, ToroidEachCoinLabelIsAPermutation) {
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 1; m <= 4; ++m) {
            const auto spec = FamilySpec::twistedToroid(n, m);
            for (SubnodeId a = 0; a < 4; ++a) {
                std::set<NodeId> targets;
                for (NodeId v = 0; v < spec.nodeCount(); ++v) {
                    targets.insert(neighbor(spec, v, a).node);
                }
                EXPECT_EQ(targets.size(), spec.nodeCount()) << spec.str() << " a=" << a;
            }
        }
    }
}

TEST(Neighbor, ToroidTwistRules) {
    const auto t = FamilySpec::twistedToroid(2, 3);
    const auto move = [&](GridPoint p, SubnodeId a) { return toGrid(t, neighbor(t, fromGrid(t, p), a).node); };
    EXPECT_EQ(move({1, 4}, toroid_coin::kPlusX), (GridPoint{2, 4}));
    EXPECT_EQ(move({3, 4}, toroid_coin::kPlusX), (GridPoint{0, 3}));
    EXPECT_EQ(move({0, 7}, toroid_coin::kMinusX), (GridPoint{3, 0}));
    EXPECT_EQ(move({2, 7}, toroid_coin::kPlusY), (GridPoint{1, 0}));
    EXPECT_EQ(move({3, 0}, toroid_coin::kMinusY), (GridPoint{0, 7}));
}

TEST(Encoding, Examples) {
    EXPECT_EQ(encodeNode(FamilySpec::hypercube(3), 5), "101");
    const auto t = FamilySpec::twistedToroid(2, 2);
    EXPECT_EQ(encodeNode(t, fromGrid(t, {2, 1})), "1001");
    EXPECT_EQ(decodeNode(t, "1001"), fromGrid(t, {2, 1}));
}

TEST(Encoding, RoundTrip) {
    for (const auto &spec : smallSpecs()) {
        for (NodeId v = 0; v < spec.nodeCount(); ++v) {
            const std::string bits = encodeNode(spec, v);
            ASSERT_EQ(bits.size(), spec.nodeBits());
            ASSERT_EQ(decodeNode(spec, bits), v);
        }
    }
}

TEST(Encoding, RejectsMalformed) {
    EXPECT_THROW(decodeNode(FamilySpec::hypercube(3), "10"), InvalidArgument);
    EXPECT_THROW(decodeNode(FamilySpec::hypercube(3), "1a1"), InvalidArgument);
    EXPECT_THROW(encodeNode(FamilySpec::hypercube(3), 8), InvalidArgument);
}

} // namespace
} // namespace qwalk
