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
 * Success-probability curves, peak and period detection, and the scaling
 * scans over graph size (steps to peak and lowered gate counts).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/graphs.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Curve for t = 0..tMax from the uniform state. tMax >= 1.
Curve successCurve(const FamilySpec &spec, NodeId marked, std::size_t tMax,
                   std::uint64_t maxAmplitudes = kDefaultMaxAmplitudes);

/// Peaks are found with hysteresis: an excursion starts once p reaches
/// baseline + 0.5 (max - baseline) and ends when p falls below
/// baseline + 0.25 (max - baseline). Each excursion contributes its first
/// argmax. A flat curve has a single peak at t = 0.
struct PeakReport {
    std::size_t tStar = 0;
    double pStar = 0.0;
    std::optional<double> period;
    double baseline = 0.0;
    /// First argmax over the whole window.
    std::size_t globalMaxStep = 0;
    double globalMaxProbability = 0.0;
};

std::vector<std::size_t> excursionPeaks(const Curve &c);

/// tStar is the peak of the first excursion. Throws on an empty curve.
PeakReport findPeak(const Curve &c);

/// Mean spacing of excursion peaks; empty with fewer than two.
std::optional<double> estimatePeriod(const Curve &c);

struct FitPoint {
    double x = 0.0;
    double y = 0.0;
};

/// y = c x^alpha, least squares on (ln x, ln y).
struct ScalingFit {
    std::vector<FitPoint> points;
    double c = 0.0;
    double alpha = 0.0;
    double r2 = 0.0;

    double predict(double x) const;
};

/// Needs at least 3 points with positive coordinates.
ScalingFit fitPowerLaw(std::vector<FitPoint> points);

/// floor(N / 3); for the toroid this is the node whose x-then-y bit string
/// has that value.
NodeId defaultMarkedNode(const FamilySpec &spec);

/// ceil(6 sqrt(N)).
std::size_t defaultWindow(std::uint64_t nodeCount);

using WindowRule = std::function<std::size_t(std::uint64_t nodeCount)>;

struct ScanRow {
    FamilySpec spec;
    std::uint64_t nodeCount = 0;
    PeakReport peak;
};

struct ScalingScan {
    std::vector<ScanRow> rows;
    /// tStar against N.
    ScalingFit fit;
};

/// Needs >= 3 sizes. Rows keep the order of `sizes`.
ScalingScan scalingScan(std::span<const FamilySpec> sizes, const WindowRule &window = defaultWindow,
                        std::uint64_t maxAmplitudes = kDefaultMaxAmplitudes);

struct GateCountRow {
    FamilySpec spec;
    std::uint64_t nodeCount = 0;
    std::size_t twoQubitGates = 0;
};

struct GateCountScan {
    std::vector<GateCountRow> rows;
    /// Count against log2 N, so that alpha is the polylog degree k.
    ScalingFit fit;
};

/// Lowered step-circuit counts with the default marked node. Throws
/// NotCompilable for any size that does not compile.
GateCountScan gateCountScan(std::span<const FamilySpec> sizes);

/// Two-qubit gate count of one lowered step.
std::size_t loweredStepGateCount(const FamilySpec &spec, NodeId marked);

} // namespace qwalk
