// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "rdpose/geometry.h"

namespace rdpose {

// Fixed undistortion values tried with the 7pt solver in every iteration.
// With shared = true only diagonal pairs (lambda, lambda) are enumerated
// (equal-distortion prior); otherwise the full u1 x u2 product.
struct SampleGrid {
    std::vector<double> u1;
    std::vector<double> u2;
    bool shared = true;

    static SampleGrid shared_values(std::vector<double> values);
    static SampleGrid different_values(std::vector<double> v1,
                                       std::vector<double> v2);

    std::size_t pair_count() const;
    std::pair<double, double> pair(std::size_t i) const;
    bool valid() const;  // nonempty, all values in the plausible range
};

struct RansacConfig {
    double threshold_px = 3.0;
    double nominal_longer_side = 1000.0;
    double confidence = 0.9999;
    int max_iterations = 10000;
    int min_iterations = 100;
    bool lo_enabled = true;
    int lo_rounds = 3;
    std::uint64_t seed = 0;

    double threshold_norm() const { return threshold_px / nominal_longer_side; }
};

// Non-minimal solver used to refit the best model on its inliers.
enum class LoTrack { pinhole, equal_distortion, different_distortion };

struct Estimate {
    FundamentalModel model;
    std::vector<bool> inlier_mask;
    double score = std::numeric_limits<double>::infinity();
    int inlier_count = 0;
    int iterations_used = 0;
    std::int64_t solver_invocations = 0;
    double elapsed_s = 0.0;
};

// Truncated-quadratic (MSAC) scoring: per-point loss min(r^2, tau^2) with
// r = sampson_residual_distorted; inlier iff r < tau. Lower score is better.
std::pair<double, std::vector<bool>> score_model(
    const FundamentalModel& model, std::span<const Correspondence> corrs,
    double tau_norm);

// k distinct indices, uniform over k-subsets, deterministic given the engine
// state.
std::vector<int> draw_sample(int population, int k, std::mt19937_64& rng);

// Refits `best` on its inliers with the track's non-minimal solver for up to
// cfg.lo_rounds rounds, adopting only strict score improvements. Never
// returns a worse Estimate; all failures leave the input unchanged.
Estimate local_optimize(const Estimate& best,
                        std::span<const Correspondence> corrs, LoTrack track,
                        const RansacConfig& cfg);

// lambda-sampling RANSAC: every iteration draws a 7-point sample and runs the
// pinhole 7pt solver once per grid pair on points undistorted with that pair,
// discarding models outside the plausible lambda range. Deterministic in
// (corrs order, grid, cfg.seed). The track defaults to the grid kind:
// shared -> equal_distortion, otherwise different_distortion.
Estimate run_ransac(std::span<const Correspondence> corrs,
                    const SampleGrid& grid, const RansacConfig& cfg);
Estimate run_ransac(std::span<const Correspondence> corrs,
                    const SampleGrid& grid, const RansacConfig& cfg,
                    LoTrack track);

}  // namespace rdpose
