// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rdpose/geometry.h"

#include <cmath>
#include <limits>

namespace rdpose {

namespace {

constexpr double kInfinityGuard = 1e-12;  // |w| below this maps to infinity
constexpr double kCenterGuard = 1e-12;    // removable singularity of r_d(r_u)

}  // namespace

Eigen::Matrix3d normalize_fundamental(const Eigen::Matrix3d& f) {
    const double norm = f.norm();
    if (norm == 0.0) {
        return f;
    }
    Eigen::Matrix3d out = f / norm;
    // Largest-magnitude entry positive; first row-major index wins ties.
    int best_r = 0, best_c = 0;
    double best = -1.0;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (std::abs(out(r, c)) > best) {
                best = std::abs(out(r, c));
                best_r = r;
                best_c = c;
            }
        }
    }
    if (out(best_r, best_c) < 0.0) {
        out = -out;
    }
    return out;
}

Eigen::Vector3d undistort_homogeneous(const ImagePoint& p, double lambda) {
    return {p.x, p.y, 1.0 + lambda * p.radius_sq()};
}

ImagePoint undistort(const ImagePoint& p, double lambda) {
    const double w = 1.0 + lambda * p.radius_sq();
    if (std::abs(w) <= kInfinityGuard) {
        throw DegeneratePoint("undistort: point maps to infinity");
    }
    return {p.x / w, p.y / w};
}

ImagePoint distort(const ImagePoint& q, double lambda) {
    const double ru_sq = q.radius_sq();
    if (ru_sq < kCenterGuard * kCenterGuard) {
        return q;
    }
    const double disc = 1.0 - 4.0 * lambda * ru_sq;
    if (disc < 0.0) {
        throw NoRealPreimage("distort: no real preimage for this radius");
    }
    // r_d = (1 - sqrt(1 - 4 lambda r_u^2)) / (2 lambda r_u), written in the
    // form that stays finite as lambda -> 0.
    const double ru = std::sqrt(ru_sq);
    const double rd = 2.0 * ru / (1.0 + std::sqrt(disc));
    const double scale = 1.0 + lambda * rd * rd;
    return {q.x * scale, q.y * scale};
}

ImagePoint normalize_point(double px, double py, double width, double height) {
    const double longer = std::max(width, height);
    return {(px - width / 2.0) / longer, (py - height / 2.0) / longer};
}

double epipolar_residual_algebraic(const FundamentalModel& model,
                                   const Correspondence& c) {
    const Eigen::Vector3d u1 = undistort_homogeneous(c.p1, model.lambda1);
    const Eigen::Vector3d u2 = undistort_homogeneous(c.p2, model.lambda2);
    if (std::abs(u1.z()) <= kInfinityGuard || std::abs(u2.z()) <= kInfinityGuard) {
        throw DegeneratePoint("epipolar residual at a point mapped to infinity");
    }
    return u1.dot(model.f * u2);
}

double sampson_residual_distorted(const FundamentalModel& model,
                                  const Correspondence& c) {
    const Eigen::Vector3d u1 = undistort_homogeneous(c.p1, model.lambda1);
    const Eigen::Vector3d u2 = undistort_homogeneous(c.p2, model.lambda2);

    const Eigen::Vector3d fu2 = model.f * u2;
    const Eigen::Vector3d ftu1 = model.f.transpose() * u1;
    const double g = u1.dot(fu2);

    // d u1 / d x1 = [1, 0, 2 lambda1 x1], d u1 / d y1 = [0, 1, 2 lambda1 y1];
    // same shape for image 2.
    const double gx1 = fu2.x() + 2.0 * model.lambda1 * c.p1.x * fu2.z();
    const double gy1 = fu2.y() + 2.0 * model.lambda1 * c.p1.y * fu2.z();
    const double gx2 = ftu1.x() + 2.0 * model.lambda2 * c.p2.x * ftu1.z();
    const double gy2 = ftu1.y() + 2.0 * model.lambda2 * c.p2.y * ftu1.z();

    const double grad_norm =
        std::sqrt(gx1 * gx1 + gy1 * gy1 + gx2 * gx2 + gy2 * gy2);
    if (grad_norm < 1e-14) {
        return std::numeric_limits<double>::infinity();
    }
    return std::abs(g) / grad_norm;
}

}  // namespace rdpose
