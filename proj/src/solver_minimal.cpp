// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rdpose/solver_minimal.h"

#include <cmath>

#include <Eigen/Dense>

#include "rdpose/numerics.h"

namespace rdpose {

namespace {

constexpr double kRankRatio = 1e-10;
constexpr double kConstraintTol = 1e-9;
constexpr double kAlphaBound = 1e6;  // implausible null-space interpolation

Eigen::MatrixXd stack_design(std::span<const Correspondence> corrs) {
    Eigen::MatrixXd design(static_cast<Eigen::Index>(corrs.size()), 9);
    for (std::size_t i = 0; i < corrs.size(); ++i) {
        const auto row = epipolar_design_row(corrs[i].p1, corrs[i].p2);
        for (int j = 0; j < 9; ++j) {
            design(static_cast<Eigen::Index>(i), j) = row[j];
        }
    }
    return design;
}

Eigen::Matrix3d from_row_major(const Eigen::VectorXd& f) {
    Eigen::Matrix3d m;
    m << f(0), f(1), f(2), f(3), f(4), f(5), f(6), f(7), f(8);
    return m;
}

}  // namespace

std::array<double, 9> epipolar_design_row(const ImagePoint& q1,
                                          const ImagePoint& q2) {
    return {q1.x * q2.x, q1.x * q2.y, q1.x,
            q1.y * q2.x, q1.y * q2.y, q1.y,
            q2.x,        q2.y,        1.0};
}

std::vector<Eigen::Matrix3d> solve_7pt(std::span<const Correspondence> corrs) {
    if (corrs.size() != 7) {
        throw InsufficientCorrespondences("solve_7pt needs exactly 7 points");
    }
    const Eigen::MatrixXd design = stack_design(corrs);
    const auto dec = numerics::svd(design);
    if (dec.s(6) <= kRankRatio * dec.s(0)) {
        throw DegenerateSample("7pt design matrix has rank < 7");
    }

    const Eigen::Matrix3d f1 = from_row_major(dec.v.col(7));
    const Eigen::Matrix3d f2 = from_row_major(dec.v.col(8));

    // det(alpha F1 + (1 - alpha) F2) as a cubic in alpha, expanded by
    // multilinearity over the columns of A = F2 and B = F1 - F2.
    const Eigen::Matrix3d a = f2;
    const Eigen::Matrix3d b = f1 - f2;
    const auto det3 = [](const Eigen::Vector3d& c0, const Eigen::Vector3d& c1,
                         const Eigen::Vector3d& c2) {
        return c0.dot(c1.cross(c2));
    };
    const Eigen::Vector3d a0 = a.col(0), a1 = a.col(1), a2 = a.col(2);
    const Eigen::Vector3d b0 = b.col(0), b1 = b.col(1), b2 = b.col(2);
    const double c0 = det3(a0, a1, a2);
    const double c1 = det3(b0, a1, a2) + det3(a0, b1, a2) + det3(a0, a1, b2);
    const double c2 = det3(b0, b1, a2) + det3(b0, a1, b2) + det3(a0, b1, b2);
    const double c3 = det3(b0, b1, b2);

    std::vector<double> alphas;
    try {
        alphas = numerics::cubic_real_roots(c3, c2, c1, c0);
    } catch (const AllZeroCoefficients&) {
        throw DegenerateSample("7pt pencil is identically singular");
    }

    std::vector<Eigen::Matrix3d> out;
    for (const double alpha : alphas) {
        if (std::abs(alpha) > kAlphaBound) {
            continue;
        }
        const Eigen::Matrix3d f = normalize_fundamental(alpha * f1 +
                                                        (1.0 - alpha) * f2);
        if (std::abs(f.determinant()) > kConstraintTol) {
            continue;
        }
        Eigen::Matrix<double, 9, 1> fvec;
        fvec << f(0, 0), f(0, 1), f(0, 2), f(1, 0), f(1, 1), f(1, 2), f(2, 0),
            f(2, 1), f(2, 2);
        bool ok = true;
        for (Eigen::Index r = 0; r < design.rows(); ++r) {
            const double res = design.row(r) * fvec;
            if (std::abs(res) > kConstraintTol * design.row(r).norm()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(f);
        }
    }
    if (out.empty() && !alphas.empty()) {
        throw DegenerateSample("7pt candidates all failed the residual bound");
    }
    return out;
}

Eigen::Matrix3d solve_8pt_linear(std::span<const Correspondence> corrs) {
    if (corrs.size() < 8) {
        throw InsufficientCorrespondences("solve_8pt_linear needs >= 8 points");
    }
    const Eigen::MatrixXd design = stack_design(corrs);
    const auto dec = numerics::svd(design);
    if (dec.s(7) <= kRankRatio * dec.s(0)) {
        throw DegenerateSample("8pt design matrix has rank < 8");
    }
    return enforce_rank2(from_row_major(dec.v.col(8)));
}

Eigen::Matrix3d enforce_rank2(const Eigen::Matrix3d& f) {
    const auto dec = numerics::svd(f);
    Eigen::Vector3d s = dec.s;
    s(2) = 0.0;
    return normalize_fundamental(dec.u * s.asDiagonal() * dec.v.transpose());
}

}  // namespace rdpose
