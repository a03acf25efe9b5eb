// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "rdpose/geometry.h"

namespace rdpose {

// Coefficients of u1^T F u2 = f . row for an undistorted correspondence
// (x, y) <-> (x', y'), f being the row-major entries of F:
//   [x x', x y', x, y x', y y', y, x', y', 1].
// This ordering is the single constraint convention of the whole library;
// every stacked system derives from it.
std::array<double, 9> epipolar_design_row(const ImagePoint& q1,
                                          const ImagePoint& q2);

// Minimal 7-point solver on undistorted (or pinhole) correspondences.
// Returns 1 to 3 canonically normalized rank-2 candidates. Throws
// DegenerateSample when the design matrix has rank < 7.
std::vector<Eigen::Matrix3d> solve_7pt(std::span<const Correspondence> corrs);

// Linear solver for >= 8 correspondences with rank-2 enforcement.
Eigen::Matrix3d solve_8pt_linear(std::span<const Correspondence> corrs);

// Nearest rank-2 matrix in Frobenius norm (smallest singular value zeroed),
// re-normalized. Idempotent.
Eigen::Matrix3d enforce_rank2(const Eigen::Matrix3d& f);

}  // namespace rdpose
