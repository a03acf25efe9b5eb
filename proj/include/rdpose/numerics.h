// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Core>

#include "rdpose/errors.h"

namespace rdpose::numerics {

struct SvdResult {
    Eigen::MatrixXd u;
    Eigen::VectorXd s;  // non-increasing
    Eigen::MatrixXd v;
};

// Full SVD, m = u * diag(s) * v^T. Throws ConvergenceFailure on non-finite
// output; never fails silently.
SvdResult svd(const Eigen::MatrixXd& m);

// Real eigenvalues of a small square matrix, ascending. Eigenvalues with
// |Im| <= imag_tol * (1 + |Re|) count as real; complex pairs are dropped.
std::vector<double> real_eigenvalues(const Eigen::MatrixXd& m,
                                     double imag_tol = 1e-6);

// Minimizes ||a*x - b||_F via column-pivoted Householder QR; exact solve for
// square nonsingular a. Throws RankDeficient so callers can reject degenerate
// samples instead of getting a silent minimum-norm answer.
Eigen::MatrixXd solve_least_squares(const Eigen::MatrixXd& a,
                                    const Eigen::MatrixXd& b);

// All real roots of c3 x^3 + c2 x^2 + c1 x + c0, with multiplicity, via the
// companion matrix plus Newton polish. Falls back to the quadratic/linear
// formula when |c3| < 1e-12 * max|ci|.
std::vector<double> cubic_real_roots(double c3, double c2, double c1,
                                     double c0);

}  // namespace rdpose::numerics
