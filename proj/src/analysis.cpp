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

#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/compiler.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

Curve successCurve(const FamilySpec &spec, NodeId marked, std::size_t tMax,
                   std::uint64_t maxAmplitudes) {
    if (tMax < 1) {
        throw InvalidArgument("tMax must be at least 1");
    }
    return evolve(spec, SearchConfig{marked}, tMax, maxAmplitudes);
}

namespace {

// Values this close to the maximum count as ties, so that mathematically
// equal samples resolve to the earliest step regardless of rounding.
constexpr double kTieTolerance = 1e-12;

std::size_t firstArgmax(std::span<const double> p, std::size_t begin, std::size_t end) {
    const double top = *std::max_element(p.begin() + static_cast<std::ptrdiff_t>(begin),
                                         p.begin() + static_cast<std::ptrdiff_t>(end));
    for (std::size_t t = begin; t < end; ++t) {
        if (p[t] >= top - kTieTolerance) {
            return t;
        }
    }
    return begin;
}

std::size_t firstArgmax(std::span<const double> p) { return firstArgmax(p, 0, p.size()); }

} // namespace

std::vector<std::size_t> excursionPeaks(const Curve &c) {
    const auto &p = c.probabilities;
    if (p.empty()) {
        return {};
    }
    const double top = *std::max_element(p.begin(), p.end());
    const double span = top - c.baseline;
    // Flat (or sub-baseline) curves: a single peak at the first maximum.
    if (!(span > kTieTolerance)) {
        return {firstArgmax(p)};
    }
    const double enter = c.baseline + 0.5 * span;
    const double leave = c.baseline + 0.25 * span;

    std::vector<std::size_t> peaks;
    std::optional<std::size_t> start;
    for (std::size_t t = 0; t < p.size(); ++t) {
        if (!start) {
            if (p[t] >= enter) {
                start = t;
            }
        } else if (p[t] < leave) {
            peaks.push_back(firstArgmax(p, *start, t));
            start.reset();
        }
    }
    if (start) {
        peaks.push_back(firstArgmax(p, *start, p.size()));
    }
    return peaks;
}

namespace {

std::optional<double> meanSpacing(const std::vector<std::size_t> &peaks) {
    if (peaks.size() < 2) {
        return std::nullopt;
    }
    return static_cast<double>(peaks.back() - peaks.front()) /
           static_cast<double>(peaks.size() - 1);
}

} // namespace

PeakReport findPeak(const Curve &c) {
    if (c.probabilities.empty()) {
        throw InvalidArgument("findPeak needs a nonempty curve");
    }
    const auto peaks = excursionPeaks(c);
    PeakReport r;
    r.baseline = c.baseline;
    r.tStar = peaks.front();
    r.pStar = c.probabilities[r.tStar];
    r.period = meanSpacing(peaks);
    r.globalMaxStep = firstArgmax(c.probabilities);
    r.globalMaxProbability = c.probabilities[r.globalMaxStep];
    return r;
}

std::optional<double> estimatePeriod(const Curve &c) { return meanSpacing(excursionPeaks(c)); }

double ScalingFit::predict(double x) const { return c * std::pow(x, alpha); }

ScalingFit fitPowerLaw(std::vector<FitPoint> points) {
    if (points.size() < 3) {
        throw InvalidArgument("a power-law fit needs at least 3 points");
    }
    const auto n = static_cast<double>(points.size());
    double sx = 0.0;
    double sy = 0.0;
    for (const auto &pt : points) {
        if (!(pt.x > 0.0) || !(pt.y > 0.0)) {
            throw InvalidArgument("power-law fit needs positive coordinates");
        }
        sx += std::log(pt.x);
        sy += std::log(pt.y);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto &pt : points) {
        const double dx = std::log(pt.x) - mx;
        const double dy = std::log(pt.y) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw InvalidArgument("power-law fit needs at least two distinct x values");
    }
    ScalingFit fit;
    fit.alpha = sxy / sxx;
    const double intercept = my - fit.alpha * mx;
    fit.c = std::exp(intercept);
    double sse = 0.0;
    for (const auto &pt : points) {
        const double r = std::log(pt.y) - (intercept + fit.alpha * std::log(pt.x));
        sse += r * r;
    }
    fit.r2 = syy == 0.0 ? 1.0 : std::clamp(1.0 - sse / syy, 0.0, 1.0);
    fit.points = std::move(points);
    return fit;
}

NodeId defaultMarkedNode(const FamilySpec &spec) { return spec.nodeCount() / 3; }

std::size_t defaultWindow(std::uint64_t nodeCount) {
    return static_cast<std::size_t>(std::ceil(6.0 * std::sqrt(static_cast<double>(nodeCount))));
}

ScalingScan scalingScan(std::span<const FamilySpec> sizes, const WindowRule &window,
                        std::uint64_t maxAmplitudes) {
    if (sizes.size() < 3) {
        throw InvalidArgument("a scaling scan needs at least 3 sizes");
    }
    for (const auto &spec : sizes) {
        checkSizeCap(spec, maxAmplitudes);
    }
    ScalingScan scan;
    std::vector<FitPoint> points;
    for (const auto &spec : sizes) {
        const std::size_t tMax = std::max<std::size_t>(1, window(spec.nodeCount()));
        const Curve curve = successCurve(spec, defaultMarkedNode(spec), tMax, maxAmplitudes);
        ScanRow row{spec, spec.nodeCount(), findPeak(curve)};
        // tStar = 0 cannot enter a log-log fit; it only happens for N <= 2.
        points.push_back({static_cast<double>(row.nodeCount),
                          static_cast<double>(std::max<std::size_t>(row.peak.tStar, 1))});
        scan.rows.push_back(std::move(row));
    }
    scan.fit = fitPowerLaw(std::move(points));
    return scan;
}

std::size_t loweredStepGateCount(const FamilySpec &spec, NodeId marked) {
    return countTwoQubitGates(lower(buildStepCircuit(spec, marked)));
}

GateCountScan gateCountScan(std::span<const FamilySpec> sizes) {
    GateCountScan scan;
    std::vector<FitPoint> points;
    for (const auto &spec : sizes) {
        if (!isCompilable(spec)) {
            throw NotCompilable(spec.str() + " has no step circuit");
        }
    }
    for (const auto &spec : sizes) {
        GateCountRow row{spec, spec.nodeCount(),
                         loweredStepGateCount(spec, defaultMarkedNode(spec))};
        points.push_back({std::log2(static_cast<double>(row.nodeCount)),
                          static_cast<double>(row.twoQubitGates)});
        scan.rows.push_back(std::move(row));
    }
    if (points.size() >= 3) {
        scan.fit = fitPowerLaw(std::move(points));
    } else {
        scan.fit.points = std::move(points);
    }
    return scan;
}

} // namespace qwalk
