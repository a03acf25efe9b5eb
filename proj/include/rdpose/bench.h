// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdpose/ransac.h"
#include "rdpose/synth.h"

namespace rdpose {

// Which non-minimal solver the local optimization refits with.
enum class SolverTrack { pinhole_7pt, equal_9pt, two_12pt };

struct MethodSpec {
    std::string name;
    SolverTrack track = SolverTrack::pinhole_7pt;
    SampleGrid grid;
    bool lo = false;
};

struct BenchRecord {
    int pair_id = 0;
    std::string method;
    PoseErrorReport report;
    int inliers = 0;
    int iterations = 0;
    std::int64_t solver_invocations = 0;
    double wall_time_s = 0.0;
};

struct BenchOptions {
    std::uint64_t seed = 0;
    double threshold_px = 3.0;
    double confidence = 0.9999;
    int max_iterations = 10000;
    int min_iterations = 100;
    int jobs = 1;  // pair-level OpenMP parallelism; 1 = serial reference
};

// Process exit codes shared by main() and the command helpers.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitNumerical = 4;

// synth: config JSON -> line-delimited dataset, one pair per line.
int cmd_synth(const std::string& config_path, const std::string& out_path);

// bench: every method on every pair; writes <out>.csv records and <out>.json
// aggregates (a trailing ".csv" on out_prefix is stripped first).
int cmd_bench(const std::string& dataset_path, const std::string& methods_path,
              const std::string& out_prefix, const BenchOptions& opts);

// sweep: equal-distortion robustness protocol over sweep_levels(); one CSV
// row of quartiles per (level, method).
int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const BenchOptions& opts);

// Dataset serialization, exposed for tests. One JSON object per line; doubles
// round-trip exactly.
std::string serialize_pair(const GroundTruthPair& pair, int pair_id);

struct DatasetEntry {
    int pair_id = 0;
    GroundTruthPair pair;
};

DatasetEntry parse_pair(const std::string& line);

std::vector<MethodSpec> parse_methods(const std::string& json_text);

// The paper-style default method matrix (sampling grids with and without
// local optimization, equal and different tracks).
std::vector<MethodSpec> default_methods();

// One RANSAC run plus pose/error evaluation against the ground truth.
BenchRecord run_method_on_pair(const MethodSpec& method,
                               const GroundTruthPair& pair, int pair_id,
                               const BenchOptions& opts,
                               std::uint64_t run_seed);

}  // namespace rdpose
