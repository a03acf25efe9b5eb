// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rdpose/numerics.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace rdpose::numerics {

namespace {

constexpr double kRankThreshold = 1e-10;

double polish_root(double c3, double c2, double c1, double c0, double x) {
    for (int it = 0; it < 8; ++it) {
        const double p = ((c3 * x + c2) * x + c1) * x + c0;
        const double dp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
        if (dp == 0.0) {
            break;
        }
        const double step = p / dp;
        x -= step;
        if (std::abs(step) <= 1e-14 * (1.0 + std::abs(x))) {
            break;
        }
    }
    return x;
}

}  // namespace

SvdResult svd(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> dec(
        m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out{dec.matrixU(), dec.singularValues(), dec.matrixV()};
    if (!out.u.allFinite() || !out.s.allFinite() || !out.v.allFinite()) {
        throw ConvergenceFailure("svd produced non-finite factors");
    }
    return out;
}

std::vector<double> real_eigenvalues(const Eigen::MatrixXd& m,
                                     double imag_tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("real_eigenvalues: matrix must be square");
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("eigenvalue iteration did not converge");
    }
    std::vector<double> out;
    const auto& ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev[i].imag()) <= imag_tol * (1.0 + std::abs(ev[i].real()))) {
            out.push_back(ev[i].real());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Eigen::MatrixXd solve_least_squares(const Eigen::MatrixXd& a,
                                    const Eigen::MatrixXd& b) {
    if (a.rows() < a.cols()) {
        throw std::invalid_argument("solve_least_squares: need rows >= cols");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    qr.setThreshold(kRankThreshold);
    qr.compute(a);
    if (qr.rank() < a.cols()) {
        throw RankDeficient("least-squares system is rank deficient");
    }
    return qr.solve(b);
}

std::vector<double> cubic_real_roots(double c3, double c2, double c1,
                                     double c0) {
    const double max_c = std::max({std::abs(c3), std::abs(c2), std::abs(c1),
                                   std::abs(c0)});
    if (max_c == 0.0) {
        throw AllZeroCoefficients("cubic with all-zero coefficients");
    }
    const double eps = 1e-12 * max_c;

    if (std::abs(c3) < eps) {
        if (std::abs(c2) < eps) {
            if (std::abs(c1) < eps) {
                return {};  // nonzero constant, no roots
            }
            return {-c0 / c1};
        }
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc < 0.0) {
            return {};
        }
        const double sq = std::sqrt(disc);
        if (sq == 0.0) {
            return {-c1 / (2.0 * c2)};
        }
        const double q = -0.5 * (c1 + std::copysign(sq, c1 == 0.0 ? 1.0 : c1));
        std::vector<double> roots{q / c2};
        if (q != 0.0) {
            roots.push_back(c0 / q);
        } else {
            roots.push_back(-c1 / c2 - roots[0]);
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
    companion(1, 0) = 1.0;
    companion(2, 1) = 1.0;
    companion(0, 2) = -c0 / c3;
    companion(1, 2) = -c1 / c3;
    companion(2, 2) = -c2 / c3;

    std::vector<double> roots = real_eigenvalues(companion);
    for (double& r : roots) {
        r = polish_root(c3, c2, c1, c0, r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace rdpose::numerics
