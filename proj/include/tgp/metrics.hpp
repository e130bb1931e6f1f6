#pragma once

#include <cstddef>
#include <span>

#include "tgp/problems.hpp"

namespace tgp {

struct MetricSample {
    std::size_t generation { 0 };
    double cm { 0.0 };
    double dm { 0.0 };
};

/// Mean Euclidean distance from each front member to its nearest reference
/// point. Lower is better. Throws std::invalid_argument on empty input.
double convergence_metric(std::span<const ObjectivePoint> front, std::span<const ObjectivePoint> reference);

/// Fraction of reference points that are the nearest reference point of at
/// least one front member (ties go to the lowest reference index). Higher is
/// better. Throws std::invalid_argument on empty input.
double diversity_metric(std::span<const ObjectivePoint> front, std::span<const ObjectivePoint> reference);

} // namespace tgp
