// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "rdpose/evaluation.h"
#include "rdpose/geometry.h"

namespace rdpose {

// Distortion distribution the generator draws lambda from.
//   scenario_a ("wild"): uniform on [-1.5, 0], density falling linearly to
//     half on [-1.8, -1.5];
//   scenario_b ("small"): uniform on [-0.3, 0];
//   scenario_c ("visible"): uniform on [-1.8, -0.5].
enum class LambdaMode { fixed, scenario_a, scenario_b, scenario_c };

struct SceneConfig {
    int n_points = 200;  // >= 14
    double depth_min = 4.0;  // units of the baseline
    double depth_max = 8.0;
    double rotation_bound_deg = 30.0;
    double noise_sigma_px = 0.0;
    double nominal_longer_side = 1000.0;
    double outlier_fraction = 0.0;  // < 0.9
    LambdaMode lambda_mode = LambdaMode::fixed;
    double lambda1 = 0.0;  // fixed mode only
    double lambda2 = 0.0;
    bool equal_lambdas = true;
    double focal = 0.9;  // normalized units
    std::uint64_t seed = 0;
};

struct GroundTruthPair {
    std::vector<Correspondence> corrs;  // distorted, normalized, noisy
    RelativePose gt_pose;
    double gt_lambda1 = 0.0;
    double gt_lambda2 = 0.0;
    std::vector<bool> inlier_truth;  // false exactly for injected outliers
    CameraIntrinsics k1, k2;
};

// Draw from one of the scenario distributions (not LambdaMode::fixed).
double sample_lambda(LambdaMode mode, std::mt19937_64& rng);

// Pinhole-project a random bounded-rotation unit-baseline scene, distort with
// the inverse division model, add Gaussian pixel noise, inject uniform
// outliers. Deterministic per cfg.seed. Throws GenerationFailure when the
// visibility rejection budget (100x n_points) runs out.
GroundTruthPair generate_pair(const SceneConfig& cfg);

// Canonically normalized F consistent with the pair's pose and intrinsics.
Eigen::Matrix3d ground_truth_fundamental(const GroundTruthPair& pair);

// lambda levels of the equal-distortion robustness sweep:
// {0, -0.3, -0.6, -0.9, -1.2, -1.5, -1.8}.
std::vector<double> sweep_levels();

// splitmix64 of (seed ^ index); decorrelates per-pair streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace rdpose
