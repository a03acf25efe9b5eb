// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "rdpose/errors.h"

namespace rdpose {

// Normalized image coordinates: origin at the image center, unit equal to the
// longer image side, so on-sensor points fall in [-0.5, 0.5]^2.
struct ImagePoint {
    double x = 0.0;
    double y = 0.0;

    double radius_sq() const { return x * x + y * y; }
};

struct Correspondence {
    ImagePoint p1;  // image 1, distorted
    ImagePoint p2;  // image 2, distorted
};

// Undistortion coefficients outside this range would mirror normalized image
// content; the estimator discards such models.
inline constexpr double kLambdaMin = -2.0;
inline constexpr double kLambdaMax = 0.5;

inline bool lambda_plausible(double lambda) {
    return lambda >= kLambdaMin && lambda <= kLambdaMax;
}

// Canonical form: unit Frobenius norm, largest-magnitude entry positive
// (first index in row-major order wins exact ties). Zero input stays zero.
Eigen::Matrix3d normalize_fundamental(const Eigen::Matrix3d& f);

// Fundamental matrix plus one undistortion coefficient per image. Equal
// distortion problems carry lambda1 == lambda2.
struct FundamentalModel {
    Eigen::Matrix3d f = Eigen::Matrix3d::Zero();
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

// Division model: [x, y, 1 + lambda * (x^2 + y^2)]. Never fails.
Eigen::Vector3d undistort_homogeneous(const ImagePoint& p, double lambda);

// Inhomogeneous undistorted coordinates; throws DegeneratePoint when the
// model maps p to infinity.
ImagePoint undistort(const ImagePoint& p, double lambda);

// Closed-form inverse of undistort. Throws NoRealPreimage when lambda > 0
// and 1 - 4*lambda*r_u^2 < 0. The distortion center is a fixed point.
ImagePoint distort(const ImagePoint& q, double lambda);

// Pixel coordinates to normalized: subtract the image center, divide by the
// longer side.
ImagePoint normalize_point(double px, double py, double width, double height);

// u(p1, lambda1)^T F u(p2, lambda2) on homogeneous undistorted points.
double epipolar_residual_algebraic(const FundamentalModel& model,
                                   const Correspondence& c);

// First-order Sampson error of the composite constraint
// g = u(p1, lambda1)^T F u(p2, lambda2), linearized in the distorted
// coordinates (chain rule through the undistortion Jacobian). Equals the
// classical Sampson error when lambda1 = lambda2 = 0. Returns +inf when the
// gradient vanishes so the point scores as an outlier.
double sampson_residual_distorted(const FundamentalModel& model,
                                  const Correspondence& c);

}  // namespace rdpose
