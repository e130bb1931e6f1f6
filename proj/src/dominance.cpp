#include "tgp/dominance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tgp {

std::vector<std::size_t> nondominated_indices(std::span<const ObjectivePoint> points)
{
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto const& p = points[a];
        auto const& q = points[b];
        return p.f1 < q.f1 || (p.f1 == q.f1 && p.f2 < q.f2);
    });

    // Walk groups of equal f1. Within a group only the minimal f2 can survive,
    // and only if it beats the best f2 seen at strictly smaller f1.
    std::vector<char> keep(points.size(), 0);
    double best_before = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        double const f1 = points[order[i]].f1;
        double const group_min = points[order[i]].f2;
        while (j < order.size() && points[order[j]].f1 == f1) {
            if (points[order[j]].f2 == group_min && group_min < best_before) {
                keep[order[j]] = 1;
            }
            ++j;
        }
        best_before = std::min(best_before, group_min);
        i = j;
    }

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<ObjectivePoint> nondominated_filter(std::span<const ObjectivePoint> points)
{
    std::vector<ObjectivePoint> out;
    for (auto i : nondominated_indices(points)) {
        out.push_back(points[i]);
    }
    return out;
}

std::vector<EvaluatedIndividual> nondominated_filter(std::span<const EvaluatedIndividual> pop)
{
    auto const objs = objectives_of(pop);
    std::vector<EvaluatedIndividual> out;
    for (auto i : nondominated_indices(objs)) {
        out.push_back(pop[i]);
    }
    return out;
}

std::vector<ObjectivePoint> objectives_of(std::span<const EvaluatedIndividual> pop)
{
    std::vector<ObjectivePoint> out;
    out.reserve(pop.size());
    for (auto const& ind : pop) {
        out.push_back(ind.objectives);
    }
    return out;
}

} // namespace tgp
