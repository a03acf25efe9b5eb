// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace rdpose {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The division model maps the point to infinity (|1 + lambda*r^2| ~ 0).
struct DegeneratePoint : Error {
    using Error::Error;
};

// distort() with lambda > 0 and a radius outside the model's image.
struct NoRealPreimage : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct AllZeroCoefficients : Error {
    using Error::Error;
};

// Sample cannot support the solver (rank loss, duplicates, collinearity).
struct DegenerateSample : Error {
    using Error::Error;
};

struct InsufficientCorrespondences : Error {
    using Error::Error;
};

struct NoModelFound : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

// Cheirality voting and the residual tie-break both tied.
struct DecompositionAmbiguous : Error {
    using Error::Error;
};

struct GenerationFailure : Error {
    using Error::Error;
};

}  // namespace rdpose
