#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tgp/engine.hpp"

namespace tgp {

/// Symbolic-regression training data: m fitness cases over n terminals.
class FitnessCases {
public:
    /// Each row is (v_1, ..., v_n, f). Rows must share one width of at
    /// least 2; throws std::invalid_argument otherwise or when empty.
    static FitnessCases from_rows(std::vector<std::vector<double>> const& rows);

    std::size_t case_count() const noexcept { return targets_.size(); }
    std::size_t terminal_count() const noexcept { return columns_.size(); }

    // Values of terminal j across all cases.
    std::vector<double> const& column(std::size_t j) const { return columns_.at(j); }
    std::vector<double> const& targets() const noexcept { return targets_; }

private:
    std::vector<std::vector<double>> columns_;
    std::vector<double> targets_;
};

/// Q = sum_k |f_k - o_k|; +inf when any output is not finite.
double q_fitness(std::span<const double> outputs, std::span<const double> targets);

/// A constant chromosome: an independent uniform [0,1) value per case.
std::vector<double> constant_chromosome(std::size_t cases, RandomSource& rng);

struct ClassicResult {
    std::vector<double> best;  // output vector of the best individual
    double q { 0.0 };
    std::size_t generation_reached { 0 }; // first generation at which `q` was attained
    std::vector<double> best_q_per_generation;
};

/// Classic single-fitness TGP with single-best elitism. Individuals are
/// output vectors over the fitness cases; crossover uses the raw operators
/// from cfg.function_set (protected division included).
ClassicResult run_classic(FitnessCases const& cases, AlgoConfig const& cfg, RandomSource& rng);

} // namespace tgp
