#include "tgp/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace tgp {

std::string_view to_string(Variant v) noexcept
{
    switch (v) {
    case Variant::Plain: return "plain";
    case Variant::Archive: return "archive";
    case Variant::Classic: return "classic";
    }
    return "?";
}

Variant variant_from_name(std::string_view name)
{
    if (name == "plain") return Variant::Plain;
    if (name == "archive") return Variant::Archive;
    if (name == "classic") return Variant::Classic;
    throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

void AlgoConfig::validate() const
{
    if (pop_size < 2) {
        throw std::invalid_argument("pop_size must be at least 2");
    }
    if (!(p_insert >= 0.0 && p_insert <= 1.0)) {
        throw std::invalid_argument("p_insert must lie in [0,1]");
    }
    if (metric_stride < 1) {
        throw std::invalid_argument("metric_stride must be at least 1");
    }
    if (tournament_size < 1) {
        throw std::invalid_argument("tournament_size must be at least 1");
    }
    if (function_set.empty()) {
        throw std::invalid_argument("function_set must be nonempty");
    }
    if (archive_capacity && *archive_capacity == 0) {
        throw std::invalid_argument("archive_capacity must be positive");
    }
}

EvaluatedIndividual const& binary_tournament(std::span<const EvaluatedIndividual> pop, RandomSource& rng)
{
    if (pop.empty()) {
        throw std::invalid_argument("binary_tournament: empty population");
    }
    auto const& a = pop[rng.index(pop.size())];
    auto const& b = pop[rng.index(pop.size())];
    if (dominates(a.objectives, b.objectives)) {
        return a;
    }
    if (dominates(b.objectives, a.objectives)) {
        return b;
    }
    return rng.coin() ? a : b;
}

namespace {
    bool sample_due(std::size_t gen, AlgoConfig const& cfg)
    {
        return gen % cfg.metric_stride == 0 || gen == cfg.generations;
    }

    void check_moo_config(AlgoConfig const& cfg)
    {
        cfg.validate();
        for (auto const& s : cfg.function_set) {
            if (!s.has_bounded()) {
                throw std::invalid_argument("function symbol '" + std::string(s.name()) + "' cannot be used on bounded genomes");
            }
        }
    }

    // Shared state of one multiobjective run.
    class MoRun {
    public:
        MoRun(Problem const& problem, AlgoConfig const& cfg, RandomSource& rng)
            : problem_(problem)
            , cfg_(cfg)
            , rng_(rng)
        {
            record_.seed = rng.seed();
        }

        EvaluatedIndividual evaluate(Genome genome)
        {
            auto const obj = problem_.evaluate(genome);
            ++record_.evaluations;
            return { std::move(genome), obj, next_id_++ };
        }

        std::vector<EvaluatedIndividual> initial_population()
        {
            std::vector<EvaluatedIndividual> pop;
            pop.reserve(cfg_.pop_size);
            for (std::size_t i = 0; i < cfg_.pop_size; ++i) {
                pop.push_back(evaluate(insert_random(problem_.gene_count(), rng_)));
            }
            return pop;
        }

        // One offspring: insertion with probability p_insert, otherwise a
        // crossover whose parents come from `select`.
        template<typename Select>
        EvaluatedIndividual offspring(Select&& select)
        {
            if (rng_.bernoulli(cfg_.p_insert)) {
                return evaluate(insert_random(problem_.gene_count(), rng_));
            }
            auto const symbol = pick_symbol(rng_, cfg_.function_set);
            std::array<Genome const*, 2> parents {};
            for (int k = 0; k < symbol.arity(); ++k) {
                parents[static_cast<std::size_t>(k)] = &select().genome;
            }
            return evaluate(crossover(std::span(parents.data(), static_cast<std::size_t>(symbol.arity())), symbol));
        }

        void sample(std::size_t gen, std::span<const EvaluatedIndividual> front)
        {
            if (!sample_due(gen, cfg_)) {
                return;
            }
            auto const objs = objectives_of(front);
            auto const& ref = problem_.reference_front();
            record_.samples.push_back({ gen, convergence_metric(objs, ref), diversity_metric(objs, ref) });
        }

        RunRecord& record() { return record_; }

    private:
        Problem const& problem_;
        AlgoConfig const& cfg_;
        RandomSource& rng_;
        RunRecord record_;
        std::uint64_t next_id_ { 0 };
    };

    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point start)
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
} // namespace

RunRecord run_mo_plain(Problem const& problem, AlgoConfig const& cfg, RandomSource& rng, GenerationObserver const& observer)
{
    check_moo_config(cfg);
    auto const start = Clock::now();
    MoRun run(problem, cfg, rng);

    auto pop = run.initial_population();
    auto front = nondominated_filter(pop);
    run.sample(0, front);
    if (observer) {
        observer(0, pop, front);
    }

    for (std::size_t gen = 1; gen <= cfg.generations; ++gen) {
        // elites are carried verbatim; overflow keeps one offspring slot
        std::vector<EvaluatedIndividual> next = front;
        truncate_by_closest_pair(next, cfg.pop_size - 1);
        next.reserve(cfg.pop_size);
        while (next.size() < cfg.pop_size) {
            next.push_back(run.offspring([&]() -> EvaluatedIndividual const& { return binary_tournament(pop, rng); }));
        }
        pop = std::move(next);
        front = nondominated_filter(pop);
        run.sample(gen, front);
        if (observer) {
            observer(gen, pop, front);
        }
    }

    auto& record = run.record();
    record.front = std::move(front);
    record.seconds = seconds_since(start);
    return std::move(record);
}

RunRecord run_mo_archive(Problem const& problem, AlgoConfig const& cfg, RandomSource& rng, GenerationObserver const& observer)
{
    check_moo_config(cfg);
    if (!cfg.archive_capacity) {
        throw std::invalid_argument("archive variant requires archive_capacity");
    }
    auto const start = Clock::now();
    MoRun run(problem, cfg, rng);
    Archive archive(*cfg.archive_capacity);

    auto pop = run.initial_population();
    archive.update(pop);
    run.sample(0, archive.members());
    if (observer) {
        observer(0, pop, archive.members());
    }

    for (std::size_t gen = 1; gen <= cfg.generations; ++gen) {
        auto const& members = archive.members();
        auto const pool = members.size() + pop.size();
        auto pick = [&]() -> EvaluatedIndividual const& {
            auto const i = rng.index(pool);
            return i < members.size() ? members[i] : pop[i - members.size()];
        };
        std::vector<EvaluatedIndividual> next;
        next.reserve(cfg.pop_size);
        while (next.size() < cfg.pop_size) {
            next.push_back(run.offspring(pick));
        }
        pop = std::move(next);
        archive.update(pop);
        run.sample(gen, archive.members());
        if (observer) {
            observer(gen, pop, archive.members());
        }
    }

    auto& record = run.record();
    record.front = archive.members();
    record.seconds = seconds_since(start);
    return std::move(record);
}

std::vector<RunRecord> run_batch(Problem const& problem, Variant variant, AlgoConfig const& cfg, unsigned threads)
{
    if (variant == Variant::Classic) {
        throw std::invalid_argument("run_batch: classic variant has no multiobjective problem");
    }
    cfg.validate();
    std::vector<RunRecord> records(cfg.runs);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cfg.runs, 1)));

    std::atomic<std::size_t> next { 0 };
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t i = next++; i < cfg.runs; i = next++) {
            try {
                RandomSource rng(cfg.seed + i);
                records[i] = variant == Variant::Plain ? run_mo_plain(problem, cfg, rng) : run_mo_archive(problem, cfg, rng);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

} // namespace tgp
