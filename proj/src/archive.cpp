#include "tgp/archive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tgp {

namespace {
    constexpr double kInf = std::numeric_limits<double>::infinity();

    double distance(ObjectivePoint const& a, ObjectivePoint const& b)
    {
        double const dx = a.f1 - b.f1;
        double const dy = a.f2 - b.f2;
        return std::sqrt(dx * dx + dy * dy);
    }
} // namespace

std::vector<std::size_t> closest_pair_survivors(std::span<const ObjectivePoint> points, std::span<const std::uint64_t> ids, std::size_t target)
{
    auto const n = points.size();
    if (ids.size() != n) {
        throw std::invalid_argument("closest_pair_survivors: ids and points differ in length");
    }
    std::vector<char> alive(n, 1);
    std::vector<std::size_t> survivors;
    if (n <= target) {
        for (std::size_t i = 0; i < n; ++i) {
            survivors.push_back(i);
        }
        return survivors;
    }

    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            dist[i * n + j] = dist[j * n + i] = distance(points[i], points[j]);
        }
    }

    // nearest alive neighbour per point; smallest index wins ties
    std::vector<std::size_t> nn(n, n);
    std::vector<double> nnd(n, kInf);
    auto refresh = [&](std::size_t i) {
        nn[i] = n;
        nnd[i] = kInf;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && alive[j] && dist[i * n + j] < nnd[i]) {
                nnd[i] = dist[i * n + j];
                nn[i] = j;
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        refresh(i);
    }

    auto second_nearest = [&](std::size_t self, std::size_t partner) {
        double best = kInf;
        for (std::size_t k = 0; k < n; ++k) {
            if (k != self && k != partner && alive[k]) {
                best = std::min(best, dist[self * n + k]);
            }
        }
        return best;
    };

    for (std::size_t remaining = n; remaining > target; --remaining) {
        std::size_t a = n;
        double best = kInf;
        for (std::size_t i = 0; i < n; ++i) {
            if (alive[i] && nn[i] < n && (a == n || nnd[i] < best)) {
                best = nnd[i];
                a = i;
            }
        }
        std::size_t const b = nn[a];
        double const da = second_nearest(a, b);
        double const db = second_nearest(b, a);
        std::size_t victim;
        if (da < db) {
            victim = a;
        } else if (db < da) {
            victim = b;
        } else {
            victim = ids[a] > ids[b] ? a : b;
        }
        alive[victim] = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (alive[i] && nn[i] == victim) {
                refresh(i);
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (alive[i]) {
            survivors.push_back(i);
        }
    }
    return survivors;
}

void truncate_by_closest_pair(std::vector<EvaluatedIndividual>& pop, std::size_t target)
{
    if (pop.size() <= target) {
        return;
    }
    auto const objs = objectives_of(pop);
    std::vector<std::uint64_t> ids;
    ids.reserve(pop.size());
    for (auto const& ind : pop) {
        ids.push_back(ind.id);
    }
    auto const keep = closest_pair_survivors(objs, ids, target);
    std::vector<EvaluatedIndividual> out;
    out.reserve(keep.size());
    for (auto i : keep) {
        out.push_back(std::move(pop[i]));
    }
    pop = std::move(out);
}

void drop_objective_duplicates(std::vector<EvaluatedIndividual>& pop)
{
    std::vector<EvaluatedIndividual> out;
    out.reserve(pop.size());
    for (auto& ind : pop) {
        bool const seen = std::any_of(out.begin(), out.end(), [&](EvaluatedIndividual const& o) { return o.objectives == ind.objectives; });
        if (!seen) {
            out.push_back(std::move(ind));
        }
    }
    pop = std::move(out);
}

Archive::Archive(std::size_t capacity)
    : capacity_(capacity)
{
    if (capacity == 0) {
        throw std::invalid_argument("Archive: capacity must be positive");
    }
}

void Archive::update(std::span<const EvaluatedIndividual> pop)
{
    std::vector<EvaluatedIndividual> pool;
    pool.reserve(members_.size() + pop.size());
    pool.insert(pool.end(), members_.begin(), members_.end());
    pool.insert(pool.end(), pop.begin(), pop.end());
    members_ = nondominated_filter(pool);
    drop_objective_duplicates(members_);
    truncate_by_closest_pair(members_, capacity_);
}

void Archive::prune_closest_pair()
{
    if (members_.size() < 2) {
        throw std::invalid_argument("Archive::prune_closest_pair: fewer than 2 members");
    }
    truncate_by_closest_pair(members_, members_.size() - 1);
}

} // namespace tgp
