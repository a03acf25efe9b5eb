// Copyright (c) 2026 the rdpose authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "rdpose/ransac.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rdpose/solver_distortion.h"
#include "rdpose/solver_minimal.h"

namespace rdpose {

namespace {

constexpr int kSampleSize = 7;
constexpr int kLoMargin = 3;  // inliers required beyond the non-minimal size

// Unbiased bounded draw; mt19937_64's output sequence is standardized, so
// results are reproducible across platforms.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0ull - n) % n;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) {
            return r % n;
        }
    }
}

int adaptive_iteration_bound(double inlier_ratio, double confidence,
                             int min_iterations, int max_iterations) {
    const double w = std::clamp(inlier_ratio, 0.0, 1.0);
    const double p_all_inliers = std::pow(w, kSampleSize);
    int needed = max_iterations;
    if (p_all_inliers >= 1.0) {
        needed = 0;
    } else if (p_all_inliers > 0.0) {
        const double denom = std::log1p(-p_all_inliers);
        if (denom < 0.0) {
            const double bound = std::log(1.0 - confidence) / denom;
            needed = bound >= static_cast<double>(max_iterations)
                         ? max_iterations
                         : static_cast<int>(std::ceil(bound));
        }
    }
    return std::clamp(needed, min_iterations, max_iterations);
}

int min_inliers_for(LoTrack track) {
    switch (track) {
        case LoTrack::pinhole:
            return 8 + kLoMargin;
        case LoTrack::equal_distortion:
            return 9 + kLoMargin;
        case LoTrack::different_distortion:
            return 12 + kLoMargin;
    }
    return 12 + kLoMargin;
}

std::vector<Correspondence> gather_inliers(
    std::span<const Correspondence> corrs, const std::vector<bool>& mask) {
    std::vector<Correspondence> out;
    out.reserve(corrs.size());
    for (std::size_t i = 0; i < corrs.size(); ++i) {
        if (mask[i]) {
            out.push_back(corrs[i]);
        }
    }
    return out;
}

// Candidate refits of the current inlier set; empty on any solver failure.
std::vector<FundamentalModel> refit_candidates(
    const std::vector<Correspondence>& inliers, const FundamentalModel& seed,
    LoTrack track) {
    std::vector<FundamentalModel> out;
    try {
        switch (track) {
            case LoTrack::pinhole: {
                std::vector<Correspondence> undistorted(inliers.size());
                for (std::size_t i = 0; i < inliers.size(); ++i) {
                    undistorted[i] = {undistort(inliers[i].p1, seed.lambda1),
                                      undistort(inliers[i].p2, seed.lambda2)};
                }
                out.push_back({solve_8pt_linear(undistorted), seed.lambda1,
                               seed.lambda2});
                break;
            }
            case LoTrack::equal_distortion:
                for (const auto& sol : solve_equal_9pt(inliers)) {
                    out.push_back({sol.f, sol.lambda, sol.lambda});
                }
                break;
            case LoTrack::different_distortion:
                for (const auto& sol : solve_two_12pt(inliers)) {
                    out.push_back({sol.f, sol.lambda1, sol.lambda2});
                }
                break;
        }
    } catch (const Error&) {
        out.clear();
    }
    return out;
}

}  // namespace

SampleGrid SampleGrid::shared_values(std::vector<double> values) {
    SampleGrid grid;
    grid.u1 = values;
    grid.u2 = std::move(values);
    grid.shared = true;
    return grid;
}

SampleGrid SampleGrid::different_values(std::vector<double> v1,
                                        std::vector<double> v2) {
    SampleGrid grid;
    grid.u1 = std::move(v1);
    grid.u2 = std::move(v2);
    grid.shared = false;
    return grid;
}

std::size_t SampleGrid::pair_count() const {
    return shared ? u1.size() : u1.size() * u2.size();
}

std::pair<double, double> SampleGrid::pair(std::size_t i) const {
    if (shared) {
        return {u1[i], u1[i]};
    }
    return {u1[i / u2.size()], u2[i % u2.size()]};
}

bool SampleGrid::valid() const {
    if (u1.empty() || u2.empty()) {
        return false;
    }
    const auto ok = [](double v) { return lambda_plausible(v); };
    return std::all_of(u1.begin(), u1.end(), ok) &&
           std::all_of(u2.begin(), u2.end(), ok);
}

std::pair<double, std::vector<bool>> score_model(
    const FundamentalModel& model, std::span<const Correspondence> corrs,
    double tau_norm) {
    if (tau_norm <= 0.0) {
        throw std::invalid_argument("score_model: threshold must be positive");
    }
    const double tau_sq = tau_norm * tau_norm;
    std::vector<bool> mask(corrs.size(), false);
    double score = 0.0;
    for (std::size_t i = 0; i < corrs.size(); ++i) {
        double r;
        try {
            r = sampson_residual_distorted(model, corrs[i]);
        } catch (const DegeneratePoint&) {
            r = std::numeric_limits<double>::infinity();
        }
        score += std::min(r * r, tau_sq);
        mask[i] = r < tau_norm;
    }
    return {score, std::move(mask)};
}

std::vector<int> draw_sample(int population, int k, std::mt19937_64& rng) {
    if (population < k) {
        throw InsufficientCorrespondences("draw_sample: population too small");
    }
    std::vector<int> indices(population);
    std::iota(indices.begin(), indices.end(), 0);
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<int>(
            bounded_draw(rng, static_cast<std::uint64_t>(population - i)));
        std::swap(indices[i], indices[i + j]);
    }
    indices.resize(k);
    return indices;
}

Estimate local_optimize(const Estimate& best,
                        std::span<const Correspondence> corrs, LoTrack track,
                        const RansacConfig& cfg) {
    Estimate result = best;
    if (!std::isfinite(result.score)) {
        return result;
    }
    const double tau = cfg.threshold_norm();
    const int min_inliers = min_inliers_for(track);
    for (int round = 0; round < cfg.lo_rounds; ++round) {
        if (result.inlier_count < min_inliers) {
            break;
        }
        const auto inliers = gather_inliers(corrs, result.inlier_mask);
        bool improved = false;
        for (const auto& cand : refit_candidates(inliers, result.model, track)) {
            if (!lambda_plausible(cand.lambda1) ||
                !lambda_plausible(cand.lambda2)) {
                continue;
            }
            auto [score, mask] = score_model(cand, corrs, tau);
            if (score < result.score) {
                result.model = cand;
                result.score = score;
                result.inlier_mask = std::move(mask);
                result.inlier_count = static_cast<int>(std::count(
                    result.inlier_mask.begin(), result.inlier_mask.end(), true));
                improved = true;
            }
        }
        if (!improved) {
            break;
        }
    }
    return result;
}

Estimate run_ransac(std::span<const Correspondence> corrs,
                    const SampleGrid& grid, const RansacConfig& cfg) {
    return run_ransac(corrs, grid, cfg,
                      grid.shared ? LoTrack::equal_distortion
                                  : LoTrack::different_distortion);
}

Estimate run_ransac(std::span<const Correspondence> corrs,
                    const SampleGrid& grid, const RansacConfig& cfg,
                    LoTrack track) {
    const auto start = std::chrono::steady_clock::now();
    const int n = static_cast<int>(corrs.size());
    if (n < kSampleSize) {
        throw InsufficientCorrespondences("run_ransac needs >= 7 points");
    }
    if (!grid.valid()) {
        throw std::invalid_argument("run_ransac: invalid sample grid");
    }

    const double tau = cfg.threshold_norm();
    std::mt19937_64 rng(cfg.seed);

    Estimate best;
    int iterations = 0;
    std::int64_t invocations = 0;
    int bound = cfg.max_iterations;
    const std::int64_t max_attempts =
        10ll * static_cast<std::int64_t>(cfg.max_iterations);

    std::vector<Correspondence> sample(kSampleSize);
    std::vector<Correspondence> undistorted(kSampleSize);
    for (std::int64_t attempts = 0; iterations < bound &&
                                    attempts < max_attempts;
         ++attempts) {
        const auto idx = draw_sample(n, kSampleSize, rng);
        for (int i = 0; i < kSampleSize; ++i) {
            sample[i] = corrs[static_cast<std::size_t>(idx[i])];
        }

        bool scored_any = false;
        for (std::size_t pi = 0; pi < grid.pair_count(); ++pi) {
            const auto [la, lb] = grid.pair(pi);
            bool usable = true;
            for (int i = 0; i < kSampleSize && usable; ++i) {
                try {
                    undistorted[i] = {undistort(sample[i].p1, la),
                                      undistort(sample[i].p2, lb)};
                } catch (const DegeneratePoint&) {
                    usable = false;
                }
            }
            if (!usable) {
                continue;
            }

            ++invocations;
            std::vector<Eigen::Matrix3d> roots;
            try {
                roots = solve_7pt(undistorted);
            } catch (const Error&) {
                continue;
            }

            for (const auto& f : roots) {
                const FundamentalModel model{f, la, lb};
                auto [score, mask] = score_model(model, corrs, tau);
                scored_any = true;
                if (score < best.score) {
                    best.model = model;
                    best.score = score;
                    best.inlier_mask = std::move(mask);
                    best.inlier_count = static_cast<int>(
                        std::count(best.inlier_mask.begin(),
                                   best.inlier_mask.end(), true));
                    if (cfg.lo_enabled) {
                        best = local_optimize(best, corrs, track, cfg);
                    }
                    bound = adaptive_iteration_bound(
                        static_cast<double>(best.inlier_count) / n,
                        cfg.confidence, cfg.min_iterations, cfg.max_iterations);
                }
            }
        }
        if (scored_any) {
            ++iterations;
        }
    }

    if (!std::isfinite(best.score)) {
        throw NoModelFound("run_ransac: no admissible model");
    }
    if (cfg.lo_enabled) {
        best = local_optimize(best, corrs, track, cfg);  // final refit
    }
    best.iterations_used = iterations;
    best.solver_invocations = invocations;
    best.elapsed_s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return best;
}

}  // namespace rdpose
