#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "tgp/engine.hpp"

using namespace tgp;

namespace {
AlgoConfig small_config(std::size_t generations = 30)
{
    AlgoConfig cfg;
    cfg.pop_size = 40;
    cfg.generations = generations;
    cfg.metric_stride = 10;
    cfg.archive_capacity = 40;
    cfg.runs = 1;
    return cfg;
}

bool same_record(RunRecord const& a, RunRecord const& b)
{
    if (a.samples.size() != b.samples.size() || a.front.size() != b.front.size() || a.evaluations != b.evaluations) {
        return false;
    }
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        if (a.samples[i].generation != b.samples[i].generation || a.samples[i].cm != b.samples[i].cm || a.samples[i].dm != b.samples[i].dm) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.front.size(); ++i) {
        if (!(a.front[i].genome == b.front[i].genome) || a.front[i].id != b.front[i].id) {
            return false;
        }
    }
    return true;
}

std::vector<EvaluatedIndividual> initial_population(Problem const& p, std::size_t n, std::uint64_t seed)
{
    RandomSource rng(seed);
    std::vector<EvaluatedIndividual> pop;
    for (std::size_t i = 0; i < n; ++i) {
        auto g = insert_random(p.gene_count(), rng);
        auto const obj = p.evaluate(g);
        pop.push_back({ std::move(g), obj, i });
    }
    return pop;
}
} // namespace

TEST_CASE("config validation")
{
    AlgoConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.p_insert = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.pop_size = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.metric_stride = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    auto const p = Problem::by_name("zdt1");
    RandomSource rng(0);
    AlgoConfig no_archive;
    CHECK_THROWS_AS(run_mo_archive(p, no_archive, rng), std::invalid_argument);
    AlgoConfig with_div = small_config();
    with_div.function_set.push_back(symbol_from_name("/"));
    CHECK_THROWS_AS(run_mo_plain(p, with_div, rng), std::invalid_argument);

    CHECK(variant_from_name("plain") == Variant::Plain);
    CHECK_THROWS_AS(variant_from_name("spea"), std::invalid_argument);
}

TEST_CASE("binary tournament")
{
    RandomSource rng(1);
    std::vector<EvaluatedIndividual> pair { { Genome({ 0.1 }), { 0.1, 0.1 }, 0 }, { Genome({ 0.5 }), { 0.5, 0.5 }, 1 } };
    for (int i = 0; i < 200; ++i) {
        auto const& w = binary_tournament(pair, rng);
        // either both draws hit the same member, or dominance picks (0.1, 0.1)
        CHECK((w.id == 0 || w.id == 1));
    }
    int wins_for_dominated = 0;
    int trials = 0;
    for (int i = 0; i < 4000; ++i) {
        RandomSource probe(1000 + i);
        auto const a = probe.index(2);
        auto const b = probe.index(2);
        if (a != b) {
            RandomSource replay(1000 + i);
            ++trials;
            wins_for_dominated += binary_tournament(pair, replay).id == 1;
        }
    }
    CHECK(trials > 0);
    CHECK(wins_for_dominated == 0);

    std::vector<EvaluatedIndividual> incomparable { { Genome({ 0.1 }), { 0.1, 0.9 }, 0 }, { Genome({ 0.9 }), { 0.9, 0.1 }, 1 } };
    int first = 0;
    constexpr int draws = 10000;
    RandomSource r(99);
    for (int i = 0; i < draws; ++i) {
        first += binary_tournament(incomparable, r).id == 0;
    }
    CHECK(first / static_cast<double>(draws) == doctest::Approx(0.5).epsilon(0.04)); // 0.5 ± 0.02

    std::vector<EvaluatedIndividual> single { { Genome({ 0.3 }), { 0.3, 0.3 }, 5 } };
    CHECK(binary_tournament(single, r).id == 5);
    CHECK_THROWS_AS(binary_tournament(std::span<const EvaluatedIndividual> {}, r), std::invalid_argument);
}

TEST_CASE("plain variant with zero generations returns the initial nondominated set")
{
    auto const p = Problem::by_name("zdt1");
    auto cfg = small_config(0);
    RandomSource rng(42);
    auto const rec = run_mo_plain(p, cfg, rng);
    auto const expected = nondominated_filter(initial_population(p, cfg.pop_size, 42));
    REQUIRE(rec.front.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(rec.front[i].genome == expected[i].genome);
    }
    REQUIRE(rec.samples.size() == 1);
    CHECK(rec.samples[0].generation == 0);
    CHECK(rec.evaluations == cfg.pop_size);
}

TEST_CASE("plain variant invariants")
{
    for (auto name : problem_names()) {
        auto const p = Problem::by_name(name);
        auto cfg = small_config(40);
        RandomSource rng(7);
        std::vector<ObjectivePoint> previous_front;
        auto observer = [&](std::size_t, std::span<const EvaluatedIndividual> pop, std::span<const EvaluatedIndividual> front) {
            CHECK(pop.size() == cfg.pop_size);
            for (auto const& ind : pop) {
                for (auto gene : ind.genome.genes()) {
                    REQUIRE(gene >= 0.0);
                    REQUIRE(gene <= 1.0);
                }
            }
            // elitism: every earlier front point is still weakly covered
            // unless the front overflowed and had to be pruned
            if (previous_front.size() >= cfg.pop_size) {
                previous_front.clear();
            }
            for (auto const& old : previous_front) {
                bool covered = false;
                for (auto const& f : front) {
                    covered |= f.objectives == old || dominates(f.objectives, old);
                }
                CHECK(covered);
            }
            previous_front = objectives_of(front);
        };
        auto const rec = run_mo_plain(p, cfg, rng, observer);
        CHECK(rec.evaluations <= cfg.pop_size * (cfg.generations + 1));
        for (auto const& a : rec.front) {
            for (auto const& b : rec.front) {
                CHECK_FALSE(dominates(a.objectives, b.objectives));
            }
        }
    }
}

TEST_CASE("plain variant with p_insert = 1")
{
    auto const p = Problem::by_name("zdt3");
    auto cfg = small_config(15);
    cfg.p_insert = 1.0;
    RandomSource rng(3);
    auto const rec = run_mo_plain(p, cfg, rng);
    for (auto const& a : rec.front) {
        for (auto const& b : rec.front) {
            CHECK_FALSE(dominates(a.objectives, b.objectives));
        }
    }
}

TEST_CASE("metric sampling schedule")
{
    auto const p = Problem::by_name("zdt6");
    auto cfg = small_config(25);
    RandomSource rng(1);
    auto const rec = run_mo_archive(p, cfg, rng);
    std::vector<std::size_t> gens;
    for (auto const& s : rec.samples) {
        gens.push_back(s.generation);
    }
    CHECK(gens == std::vector<std::size_t> { 0, 10, 20, 25 });
    CHECK(rec.final_sample().generation == 25);
}

TEST_CASE("archive variant invariants")
{
    auto const p = Problem::by_name("zdt1");
    auto cfg = small_config(30);
    cfg.archive_capacity = 15;
    RandomSource rng(11);
    std::size_t calls = 0;
    auto observer = [&](std::size_t gen, std::span<const EvaluatedIndividual> pop, std::span<const EvaluatedIndividual> archive) {
        ++calls;
        CHECK(pop.size() == cfg.pop_size);
        CHECK(archive.size() <= 15);
        for (auto const& a : archive) {
            for (auto const& b : archive) {
                CHECK_FALSE(dominates(a.objectives, b.objectives));
            }
        }
        if (gen == 0) {
            Archive expected(15);
            expected.update(initial_population(p, cfg.pop_size, 11));
            REQUIRE(expected.size() == archive.size());
            for (std::size_t i = 0; i < archive.size(); ++i) {
                CHECK(archive[i].id == expected.members()[i].id);
            }
        }
    };
    auto const rec = run_mo_archive(p, cfg, rng, observer);
    CHECK(calls == cfg.generations + 1);
    CHECK(rec.front.size() <= 15);
    CHECK(rec.evaluations == cfg.pop_size * (cfg.generations + 1));
}

TEST_CASE("runs are deterministic per seed")
{
    auto const p = Problem::by_name("zdt2");
    auto cfg = small_config(20);
    for (int variant = 0; variant < 2; ++variant) {
        RandomSource a(5), b(5), c(6);
        auto const ra = variant ? run_mo_archive(p, cfg, a) : run_mo_plain(p, cfg, a);
        auto const rb = variant ? run_mo_archive(p, cfg, b) : run_mo_plain(p, cfg, b);
        auto const rc = variant ? run_mo_archive(p, cfg, c) : run_mo_plain(p, cfg, c);
        CHECK(same_record(ra, rb));
        CHECK(ra.seed == 5);
        CHECK(rc.seed == 6);
    }
}

TEST_CASE("batch seeding and ordering")
{
    auto const p = Problem::by_name("zdt3");
    auto cfg = small_config(10);
    cfg.runs = 4;
    cfg.seed = 100;
    auto const serial = run_batch(p, Variant::Archive, cfg, 1);
    auto const parallel = run_batch(p, Variant::Archive, cfg, 3);
    REQUIRE(serial.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(serial[i].seed == 100 + i);
        CHECK(same_record(serial[i], parallel[i]));
        RandomSource rng(100 + i);
        CHECK(same_record(serial[i], run_mo_archive(p, cfg, rng)));
    }
    CHECK_THROWS_AS(run_batch(p, Variant::Classic, cfg), std::invalid_argument);
}
