// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "rdpose/geometry.h"

namespace rdpose {

struct CameraIntrinsics {
    Eigen::Matrix3d k = Eigen::Matrix3d::Identity();  // upper triangular
};

// X2 = r * X1 + t maps camera-1 coordinates into camera 2; ||t|| = 1.
struct RelativePose {
    Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
    Eigen::Vector3d t = Eigen::Vector3d::UnitX();
};

struct PoseErrorReport {
    double rot_err = 0.0;    // degrees
    double trans_err = 0.0;  // degrees
    double pose_err = 0.0;   // max(rot_err, trans_err)
    double lambda_err = 0.0;
};

// E = k1^T F k2, so calibrated rays x1_hat = K1^{-1} u1 (image 1, left) and
// x2_hat = K2^{-1} u2 satisfy x1_hat^T E x2_hat = 0. Singular values are
// projected to (s, s, 0) with s the mean of the two largest.
Eigen::Matrix3d essential_from_fundamental(const Eigen::Matrix3d& f,
                                           const CameraIntrinsics& k1,
                                           const CameraIntrinsics& k2);

// Four-way decomposition with cheirality voting over DLT-triangulated
// correspondences (calibrated, undistorted); ties broken by the smaller
// reprojection residual sum, and a full tie throws DecompositionAmbiguous.
RelativePose recover_pose(const Eigen::Matrix3d& e,
                          std::span<const Correspondence> calibrated);

// Angle of r_est^T * r_gt, degrees.
double rotation_error_deg(const Eigen::Matrix3d& r_est,
                          const Eigen::Matrix3d& r_gt);

// Angle between translation directions, degrees; the sign is kept
// (cheirality already fixed it), so opposite directions give 180.
double translation_error_deg(const Eigen::Vector3d& t_est,
                             const Eigen::Vector3d& t_gt);

// Exact area under the step recall curve:
// AUC@t = (1/N) * sum_i max(0, 1 - e_i/t). Failed estimates enter as +inf.
double pose_auc(std::span<const double> errors_deg, double threshold_deg);

// 0.5 * (|l1_est - l1_gt| + |l2_est - l2_gt|); reduces to |l_est - l_gt| in
// the equal-distortion case.
double distortion_error(const FundamentalModel& est, double gt_lambda1,
                        double gt_lambda2);

struct AggregateStats {
    PoseErrorReport avg;
    PoseErrorReport med;
    double auc5 = 0.0;
    double auc10 = 0.0;
    double auc20 = 0.0;
};

AggregateStats aggregate(std::span<const PoseErrorReport> reports);

}  // namespace rdpose
