#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tgp/dominance.hpp"

namespace tgp {

/// Indices (ascending) of the members kept after repeatedly removing one
/// member of the closest pair until `target` remain.
///
/// Each step finds the pair at minimal Euclidean distance in objective
/// space (first pair in index order on ties) and drops the member whose
/// nearest other neighbour, excluding its partner, is closer. Equal
/// distances (including "no other neighbour") remove the larger id.
std::vector<std::size_t> closest_pair_survivors(std::span<const ObjectivePoint> points, std::span<const std::uint64_t> ids, std::size_t target);

/// Removes members of `pop` in place by closest-pair pruning until at most
/// `target` remain. Survivor order is preserved.
void truncate_by_closest_pair(std::vector<EvaluatedIndividual>& pop, std::size_t target);

/// Keeps the first member of every group sharing one objective point.
void drop_objective_duplicates(std::vector<EvaluatedIndividual>& pop);

/// Bounded store of mutually nondominated individuals.
class Archive {
public:
    explicit Archive(std::size_t capacity);

    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::vector<EvaluatedIndividual> const& members() const noexcept { return members_; }

    /// members <- nondominated(members ∪ pop), then closest-pair pruning
    /// down to capacity.
    void update(std::span<const EvaluatedIndividual> pop);

    /// One pruning step. Throws std::invalid_argument with fewer than 2 members.
    void prune_closest_pair();

private:
    std::size_t capacity_;
    std::vector<EvaluatedIndividual> members_;
};

} // namespace tgp
