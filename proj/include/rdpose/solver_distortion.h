// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "rdpose/geometry.h"

namespace rdpose {

// Stacked coefficient matrices of (A0 + lambda*A1 + lambda^2*A2) f = 0 for
// equal unknown distortion in both images. Per-correspondence rows, with
// r, r' the distorted radii in images 1 and 2:
//   A0: [x x', x y', x, y x', y y', y, x', y', 1]
//   A1: [0, 0, x r'^2, 0, 0, y r'^2, x' r^2, y' r^2, r^2 + r'^2]
//   A2: [0, 0, 0, 0, 0, 0, 0, 0, r^2 r'^2]
struct EqualDistortionSystem {
    Eigen::MatrixXd a0;  // N x 9
    Eigen::MatrixXd a1;  // zero columns 1,2,4,5 (1-based)
    Eigen::MatrixXd a2;  // zero columns 1..8
};

EqualDistortionSystem build_equal_system(std::span<const Correspondence> corrs);

struct EqualDistortionSolution {
    Eigen::Matrix3d f;  // canonical, full rank allowed (det constraint ignored)
    double lambda = 0.0;
};

// Polynomial-eigenvalue solver for F and one shared undistortion parameter.
// With sigma = 1/lambda the companion matrix reduces to 6x6, so at most six
// candidates come back, each filtered to the plausible lambda range. N = 9
// solves the system exactly; N > 9 uses linear least squares. lambda = 0 is
// unreachable through the sigma substitution; pair with a pinhole hypothesis.
std::vector<EqualDistortionSolution> solve_equal_9pt(
    std::span<const Correspondence> corrs);

// Hidden-variable system (C0 + lambda1*C1) ftilde = 0 for two independent
// distortions, with the image-2 coefficient folded into the lifted vector
// ftilde = [f1..f9, lambda2*f3, lambda2*f6, lambda2*f9]:
//   C0: [x x', x y', x, y x', y y', y, x', y', 1, x r'^2, y r'^2, r'^2]
//   C1: [0, 0, 0, 0, 0, 0, x' r^2, y' r^2, r^2, 0, 0, r^2 r'^2]
struct TwoDistortionSystem {
    Eigen::MatrixXd c0;  // N x 12
    Eigen::MatrixXd c1;  // nonzero only in columns 7, 8, 9, 12 (1-based)
};

TwoDistortionSystem build_two_system(std::span<const Correspondence> corrs);

struct TwoDistortionSolution {
    Eigen::Matrix3d f;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

// Generalized-eigenvalue solver for F and two distortion parameters; the
// infinite eigenvalues are removed in advance, leaving a 4x4 problem and at
// most four candidates. lambda1 = 1/sigma from the eigenvalue, lambda2 from
// the least-squares ratio of the lifted components.
std::vector<TwoDistortionSolution> solve_two_12pt(
    std::span<const Correspondence> corrs);

}  // namespace rdpose
