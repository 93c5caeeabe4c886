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
 * The `qwalk` command line: simulate, compile, verify and scan.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/graphs.hpp"

namespace qwalk::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kUsage = 2,
    kSizeCap = 3,
    kNotCompilable = 4,
    kVerificationFailed = 5,
};

enum class Command { Simulate, Compile, Verify, Scan };
enum class OutputFormat { Csv, Json };
enum class ScanMetric { Steps, Gates };

struct RunConfig {
    Command command = Command::Simulate;
    std::optional<FamilySpec> spec;
    std::optional<NodeId> marked;
    std::optional<std::size_t> tMax;
    /// Output files are PREFIX.<ext>; empty writes to stdout.
    std::string outPrefix;
    OutputFormat format = OutputFormat::Csv;
    double tolerance = 1e-10;
    std::string circuitFile;
    std::size_t steps = 25;
    // scan only
    std::optional<Family> family;
    std::vector<unsigned> sizes;
    ScanMetric metric = ScanMetric::Steps;
    double windowScale = 6.0;

    std::uint64_t maxAmplitudes = 0;
};

/// Parses argv and dispatches. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

int cmdSimulate(const RunConfig &cfg, std::ostream &out);
int cmdCompile(const RunConfig &cfg, std::ostream &out);
int cmdVerify(const RunConfig &cfg, std::ostream &out);
int cmdScan(const RunConfig &cfg, std::ostream &out);

/// Default sizes of `scan` per family and metric (n values; the toroid uses
/// n = m).
std::vector<unsigned> defaultScanSizes(Family family, ScanMetric metric);

} // namespace qwalk::cli
