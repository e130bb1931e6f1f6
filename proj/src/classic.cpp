#include "tgp/classic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tgp {

FitnessCases FitnessCases::from_rows(std::vector<std::vector<double>> const& rows)
{
    if (rows.empty()) {
        throw std::invalid_argument("fitness cases: no rows");
    }
    auto const width = rows.front().size();
    if (width < 2) {
        throw std::invalid_argument("fitness cases: need at least one terminal and a target");
    }
    FitnessCases fc;
    fc.columns_.assign(width - 1, std::vector<double>(rows.size()));
    fc.targets_.resize(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != width) {
            throw std::invalid_argument("fitness cases: row " + std::to_string(k) + " has " + std::to_string(rows[k].size()) + " values, expected " + std::to_string(width));
        }
        for (std::size_t j = 0; j + 1 < width; ++j) {
            fc.columns_[j][k] = rows[k][j];
        }
        fc.targets_[k] = rows[k][width - 1];
    }
    return fc;
}

double q_fitness(std::span<const double> outputs, std::span<const double> targets)
{
    double q = 0.0;
    for (std::size_t k = 0; k < outputs.size(); ++k) {
        if (!std::isfinite(outputs[k])) {
            return std::numeric_limits<double>::infinity();
        }
        q += std::abs(targets[k] - outputs[k]);
    }
    return std::isfinite(q) ? q : std::numeric_limits<double>::infinity();
}

std::vector<double> constant_chromosome(std::size_t cases, RandomSource& rng)
{
    std::vector<double> v(cases);
    for (auto& x : v) {
        x = rng.uniform();
    }
    return v;
}

namespace {
    struct Scored {
        std::vector<double> outputs;
        double q;
    };

    class ClassicRun {
    public:
        ClassicRun(FitnessCases const& cases, RandomSource& rng)
            : cases_(cases)
            , rng_(rng)
        {
        }

        Scored score(std::vector<double> outputs) const
        {
            double const q = q_fitness(outputs, cases_.targets());
            return { std::move(outputs), q };
        }

        Scored terminal(std::size_t j) const { return score(cases_.column(j)); }

        Scored constant() const { return score(constant_chromosome(cases_.case_count(), rng_)); }

        // A single-terminal individual: a terminal column or a constant
        // chromosome with equal probability.
        Scored simple()
        {
            return rng_.coin() ? terminal(rng_.index(cases_.terminal_count())) : constant();
        }

        Scored const& tournament(std::vector<Scored> const& pop, std::size_t size)
        {
            Scored const* best = &pop[rng_.index(pop.size())];
            for (std::size_t t = 1; t < size; ++t) {
                auto const& challenger = pop[rng_.index(pop.size())];
                if (challenger.q < best->q || (challenger.q == best->q && rng_.coin())) {
                    best = &challenger;
                }
            }
            return *best;
        }

    private:
        FitnessCases const& cases_;
        RandomSource& rng_;
    };

    std::size_t best_index(std::vector<Scored> const& pop)
    {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pop.size(); ++i) {
            if (pop[i].q < pop[best].q) {
                best = i;
            }
        }
        return best;
    }
} // namespace

ClassicResult run_classic(FitnessCases const& cases, AlgoConfig const& cfg, RandomSource& rng)
{
    cfg.validate();
    if (cases.case_count() == 0 || cases.terminal_count() == 0) {
        throw std::invalid_argument("run_classic: empty fitness cases");
    }
    ClassicRun run(cases, rng);

    // half terminal columns (cycled), half constant chromosomes
    std::vector<Scored> pop;
    pop.reserve(cfg.pop_size);
    for (std::size_t i = 0; i < cfg.pop_size; ++i) {
        pop.push_back(i % 2 == 0 ? run.terminal((i / 2) % cases.terminal_count()) : run.constant());
    }

    ClassicResult result;
    auto b = best_index(pop);
    result.q = pop[b].q;
    result.best_q_per_generation.push_back(result.q);

    for (std::size_t gen = 1; gen <= cfg.generations; ++gen) {
        std::vector<Scored> next;
        next.reserve(cfg.pop_size);
        next.push_back(pop[b]);
        while (next.size() < cfg.pop_size) {
            if (rng.bernoulli(cfg.p_insert)) {
                next.push_back(run.simple());
                continue;
            }
            auto const symbol = pick_symbol(rng, cfg.function_set);
            std::array<std::vector<double> const*, 2> parents {};
            for (int k = 0; k < symbol.arity(); ++k) {
                parents[static_cast<std::size_t>(k)] = &run.tournament(pop, cfg.tournament_size).outputs;
            }
            next.push_back(run.score(crossover_raw(std::span(parents.data(), static_cast<std::size_t>(symbol.arity())), symbol)));
        }
        pop = std::move(next);
        b = best_index(pop);
        if (pop[b].q < result.q) {
            result.q = pop[b].q;
            result.generation_reached = gen;
        }
        result.best_q_per_generation.push_back(pop[b].q);
    }

    result.best = pop[b].outputs;
    result.q = pop[b].q;
    return result;
}

} // namespace tgp
