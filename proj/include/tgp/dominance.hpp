#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tgp/core.hpp"
#include "tgp/problems.hpp"

namespace tgp {

struct EvaluatedIndividual {
    Genome genome;
    ObjectivePoint objectives;
    std::uint64_t id { 0 }; // creation order within a run
};

// Pareto dominance for minimization: no worse in both objectives and
// strictly better in at least one.
inline bool dominates(ObjectivePoint const& a, ObjectivePoint const& b) noexcept
{
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

/// Positions of the members dominated by no other member, in input order.
/// Objective-space duplicates are all retained. O(n log n).
std::vector<std::size_t> nondominated_indices(std::span<const ObjectivePoint> points);

std::vector<ObjectivePoint> nondominated_filter(std::span<const ObjectivePoint> points);
std::vector<EvaluatedIndividual> nondominated_filter(std::span<const EvaluatedIndividual> pop);

std::vector<ObjectivePoint> objectives_of(std::span<const EvaluatedIndividual> pop);

} // namespace tgp
