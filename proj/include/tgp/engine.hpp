#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tgp/archive.hpp"
#include "tgp/core.hpp"
#include "tgp/dominance.hpp"
#include "tgp/metrics.hpp"
#include "tgp/problems.hpp"
#include "tgp/random.hpp"

namespace tgp {

enum class Variant { Plain, Archive, Classic };

std::string_view to_string(Variant v) noexcept;
Variant variant_from_name(std::string_view name);

struct AlgoConfig {
    std::size_t pop_size { 100 };
    std::size_t generations { 250 };
    double p_insert { 0.05 };
    std::size_t tournament_size { 2 };
    std::vector<FunctionSymbol> function_set { moo_function_set() };
    std::optional<std::size_t> archive_capacity {};
    std::size_t runs { 30 };
    std::size_t metric_stride { 10 };
    std::uint64_t seed { 0 };

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct RunRecord {
    std::uint64_t seed { 0 };
    std::vector<MetricSample> samples;
    std::vector<EvaluatedIndividual> front;
    double seconds { 0.0 };
    std::size_t evaluations { 0 };

    MetricSample const& final_sample() const { return samples.back(); }
};

/// Called once per generation (0 = initial population) after the population
/// and, for the archive variant, the archive are final. `front` is the set
/// metrics are computed on.
using GenerationObserver = std::function<void(std::size_t generation, std::span<const EvaluatedIndividual> population, std::span<const EvaluatedIndividual> front)>;

/// Draws two members uniformly; the dominating one wins, otherwise a fair
/// coin decides. Throws std::invalid_argument on an empty population.
EvaluatedIndividual const& binary_tournament(std::span<const EvaluatedIndividual> pop, RandomSource& rng);

/// Multiobjective TGP with elitist copying of the nondominated set.
RunRecord run_mo_plain(Problem const& problem, AlgoConfig const& cfg, RandomSource& rng, GenerationObserver const& observer = {});

/// Multiobjective TGP with a bounded external archive. Parents are drawn
/// uniformly from archive ∪ population; the returned front is the archive.
RunRecord run_mo_archive(Problem const& problem, AlgoConfig const& cfg, RandomSource& rng, GenerationObserver const& observer = {});

/// cfg.runs independent runs; run i is seeded with cfg.seed + i. Runs may
/// execute concurrently (up to `threads`, 0 = hardware concurrency); the
/// result is ordered by run index.
std::vector<RunRecord> run_batch(Problem const& problem, Variant variant, AlgoConfig const& cfg, unsigned threads = 0);

} // namespace tgp
