// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rdpose/solver_distortion.h"

#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "rdpose/numerics.h"

namespace rdpose {

namespace {

constexpr double kSigmaGate = 1e-8;  // |sigma| below this means lambda -> inf

Eigen::Matrix3d from_row_major(const Eigen::VectorXd& f) {
    Eigen::Matrix3d m;
    m << f(0), f(1), f(2), f(3), f(4), f(5), f(6), f(7), f(8);
    return m;
}

void require_zero_columns(const Eigen::MatrixXd& m,
                          std::span<const int> zero_cols, const char* what) {
    for (const int c : zero_cols) {
        if (m.col(c).cwiseAbs().maxCoeff() != 0.0) {
            throw std::logic_error(std::string(what) +
                                   ": sparsity pattern violated");
        }
    }
}

Eigen::VectorXd smallest_right_singular_vector(const Eigen::MatrixXd& m) {
    const auto dec = numerics::svd(m);
    return dec.v.col(dec.v.cols() - 1);
}

}  // namespace

EqualDistortionSystem build_equal_system(
    std::span<const Correspondence> corrs) {
    const auto n = static_cast<Eigen::Index>(corrs.size());
    EqualDistortionSystem sys{Eigen::MatrixXd::Zero(n, 9),
                              Eigen::MatrixXd::Zero(n, 9),
                              Eigen::MatrixXd::Zero(n, 9)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = corrs[i].p1.x, y = corrs[i].p1.y;
        const double xp = corrs[i].p2.x, yp = corrs[i].p2.y;
        const double r2 = corrs[i].p1.radius_sq();
        const double rp2 = corrs[i].p2.radius_sq();
        sys.a0.row(i) << x * xp, x * yp, x, y * xp, y * yp, y, xp, yp, 1.0;
        sys.a1.row(i) << 0.0, 0.0, x * rp2, 0.0, 0.0, y * rp2, xp * r2,
            yp * r2, r2 + rp2;
        sys.a2.row(i) << 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, r2 * rp2;
    }
    return sys;
}

std::vector<EqualDistortionSolution> solve_equal_9pt(
    std::span<const Correspondence> corrs) {
    if (corrs.size() < 9) {
        throw InsufficientCorrespondences("solve_equal_9pt needs >= 9 points");
    }
    const EqualDistortionSystem sys = build_equal_system(corrs);

    // Retained pencil state [f9, s*f3, s*f6, s*f7, s*f8, s*f9] comes from the
    // nonzero columns of A2 ({9}) and A1 ({3,6,7,8,9}); check before reducing.
    static constexpr std::array<int, 8> a2_zero{0, 1, 2, 3, 4, 5, 6, 7};
    static constexpr std::array<int, 4> a1_zero{0, 1, 3, 4};
    require_zero_columns(sys.a2, a2_zero, "A2");
    require_zero_columns(sys.a1, a1_zero, "A1");

    Eigen::MatrixXd m2, m1;
    try {
        m2 = -numerics::solve_least_squares(sys.a0, sys.a2);
        m1 = -numerics::solve_least_squares(sys.a0, sys.a1);
    } catch (const RankDeficient&) {
        throw DegenerateSample("equal-distortion system: A0 is rank deficient");
    }

    // Companion matrix of (A2 + s A1 + s^2 A0) f = 0 restricted to the
    // retained indices; the remaining 12 eigenvalues of the full 18x18 form
    // are zeros attached to the removed zero columns.
    static constexpr std::array<int, 5> lifted{2, 5, 6, 7, 8};
    Eigen::Matrix<double, 6, 6> reduced = Eigen::Matrix<double, 6, 6>::Zero();
    reduced(0, 5) = 1.0;  // s * f9 = (s f9)
    for (int k = 0; k < 5; ++k) {
        reduced(k + 1, 0) = m2(lifted[k], 8);
        for (int j = 0; j < 5; ++j) {
            reduced(k + 1, 1 + j) = m1(lifted[k], lifted[j]);
        }
    }

    std::vector<EqualDistortionSolution> out;
    for (const double sigma : numerics::real_eigenvalues(reduced)) {
        if (std::abs(sigma) <= kSigmaGate) {
            continue;
        }
        const double lambda = 1.0 / sigma;
        if (!lambda_plausible(lambda)) {
            continue;
        }
        const Eigen::MatrixXd pencil =
            sys.a0 + lambda * sys.a1 + lambda * lambda * sys.a2;
        const Eigen::VectorXd f = smallest_right_singular_vector(pencil);
        out.push_back({normalize_fundamental(from_row_major(f)), lambda});
    }
    return out;
}

TwoDistortionSystem build_two_system(std::span<const Correspondence> corrs) {
    const auto n = static_cast<Eigen::Index>(corrs.size());
    TwoDistortionSystem sys{Eigen::MatrixXd::Zero(n, 12),
                            Eigen::MatrixXd::Zero(n, 12)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = corrs[i].p1.x, y = corrs[i].p1.y;
        const double xp = corrs[i].p2.x, yp = corrs[i].p2.y;
        const double r2 = corrs[i].p1.radius_sq();
        const double rp2 = corrs[i].p2.radius_sq();
        sys.c0.row(i) << x * xp, x * yp, x, y * xp, y * yp, y, xp, yp, 1.0,
            x * rp2, y * rp2, rp2;
        sys.c1.row(i) << 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, xp * r2, yp * r2, r2,
            0.0, 0.0, r2 * rp2;
    }
    return sys;
}

std::vector<TwoDistortionSolution> solve_two_12pt(
    std::span<const Correspondence> corrs) {
    if (corrs.size() < 12) {
        throw InsufficientCorrespondences("solve_two_12pt needs >= 12 points");
    }
    const TwoDistortionSystem sys = build_two_system(corrs);

    static constexpr std::array<int, 8> c1_zero{0, 1, 2, 3, 4, 5, 9, 10};
    require_zero_columns(sys.c1, c1_zero, "C1");

    Eigen::MatrixXd d;
    try {
        d = -numerics::solve_least_squares(sys.c0, sys.c1);
    } catch (const RankDeficient&) {
        throw DegenerateSample("two-distortion system: C0 is rank deficient");
    }

    // D = -C0^+ C1 keeps C1's zero columns, so the eight infinite eigenvalues
    // drop out with the corresponding rows; a 4x4 problem remains.
    static constexpr std::array<int, 4> kept{6, 7, 8, 11};
    Eigen::Matrix4d reduced;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            reduced(r, c) = d(kept[r], kept[c]);
        }
    }

    std::vector<TwoDistortionSolution> out;
    for (const double sigma : numerics::real_eigenvalues(reduced)) {
        if (std::abs(sigma) <= kSigmaGate) {
            continue;
        }
        const double lambda1 = 1.0 / sigma;
        if (!lambda_plausible(lambda1)) {
            continue;
        }
        const Eigen::VectorXd ftilde =
            smallest_right_singular_vector(sys.c0 + lambda1 * sys.c1);
        const double denom = ftilde(2) * ftilde(2) + ftilde(5) * ftilde(5) +
                             ftilde(8) * ftilde(8);
        if (denom < 1e-20) {
            continue;
        }
        // Least squares over the consistency ratios of the lifted components.
        const double lambda2 = (ftilde(9) * ftilde(2) + ftilde(10) * ftilde(5) +
                                ftilde(11) * ftilde(8)) /
                               denom;
        if (!lambda_plausible(lambda2)) {
            continue;
        }
        out.push_back({normalize_fundamental(from_row_major(ftilde.head<9>())),
                       lambda1, lambda2});
    }
    return out;
}

}  // namespace rdpose
