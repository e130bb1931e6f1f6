#include "tgp/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgp {

namespace {
    struct Nearest {
        std::size_t index;
        double squared;
    };

    Nearest nearest_reference(ObjectivePoint const& p, std::span<const ObjectivePoint> reference)
    {
        Nearest best { 0, std::numeric_limits<double>::infinity() };
        for (std::size_t j = 0; j < reference.size(); ++j) {
            double const dx = p.f1 - reference[j].f1;
            double const dy = p.f2 - reference[j].f2;
            double const d2 = dx * dx + dy * dy;
            if (d2 < best.squared) {
                best = { j, d2 };
            }
        }
        return best;
    }

    void require_nonempty(std::span<const ObjectivePoint> front, std::span<const ObjectivePoint> reference, char const* who)
    {
        if (front.empty() || reference.empty()) {
            throw std::invalid_argument(std::string(who) + ": front and reference must be nonempty");
        }
    }
} // namespace

double convergence_metric(std::span<const ObjectivePoint> front, std::span<const ObjectivePoint> reference)
{
    require_nonempty(front, reference, "convergence_metric");
    double sum = 0.0;
    for (auto const& p : front) {
        sum += std::sqrt(nearest_reference(p, reference).squared);
    }
    return sum / static_cast<double>(front.size());
}

double diversity_metric(std::span<const ObjectivePoint> front, std::span<const ObjectivePoint> reference)
{
    require_nonempty(front, reference, "diversity_metric");
    std::vector<char> marked(reference.size(), 0);
    std::size_t count = 0;
    for (auto const& p : front) {
        auto const j = nearest_reference(p, reference).index;
        if (!marked[j]) {
            marked[j] = 1;
            ++count;
        }
    }
    return static_cast<double>(count) / static_cast<double>(reference.size());
}

} // namespace tgp
