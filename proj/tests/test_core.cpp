#include <doctest.h>

#include <stdexcept>

#include <array>
#include <cmath>
#include <map>

#include "tgp/core.hpp"

using namespace tgp;

namespace {
Genome g(std::vector<double> v) { return Genome(std::move(v)); }

Genome cross(std::vector<Genome const*> parents, FunctionSymbol s)
{
    return crossover(std::span<const Genome* const>(parents.data(), parents.size()), s);
}
} // namespace

TEST_CASE("bounded operators")
{
    CHECK(bounded_add(0.4, 0.6) == doctest::Approx(0.5));
    CHECK(bounded_add(0.0, 0.0) == 0.0);
    CHECK(bounded_add(1.0, 1.0) == 1.0);

    CHECK(bounded_sub(0.3, 0.8) == doctest::Approx(0.5));
    CHECK(bounded_sub(0.7, 0.7) == 0.0);
    CHECK(bounded_sub(1.0, 0.0) == 1.0);

    CHECK(bounded_mul(0.5, 0.5) == 0.25);
    CHECK(bounded_sin(1.0) == 1.0);
    CHECK(bounded_sin(0.0) == 0.0);
    CHECK(bounded_exp(0.0) == doctest::Approx(0.36787944117144233).epsilon(1e-15));
    CHECK(bounded_exp(1.0) == 1.0);
}

TEST_CASE("protected division returns the numerator near zero")
{
    CHECK(protected_div(3.0, 0.0) == 3.0);
    CHECK(protected_div(3.0, 1e-10) == 3.0);
    CHECK(protected_div(3.0, 2.0) == 1.5);
}

TEST_CASE("function symbols")
{
    CHECK(symbol_from_name("+").arity() == 2);
    CHECK(symbol_from_name("-").arity() == 2);
    CHECK(symbol_from_name("*").arity() == 2);
    CHECK(symbol_from_name("sin").arity() == 1);
    CHECK(symbol_from_name("exp").arity() == 1);
    CHECK_FALSE(symbol_from_name("/").has_bounded());
    CHECK_THROWS_AS(symbol_from_name("pow"), std::invalid_argument);
    CHECK_THROWS_AS(symbol_from_name("/").bounded_eval(0.5, 0.5), std::invalid_argument);

    auto const moo = moo_function_set();
    REQUIRE(moo.size() == 5);
    for (auto s : moo) {
        CHECK(s.has_bounded());
    }
    CHECK(symbol_from_name("-").raw_eval(1.0, 3.0) == -2.0);
}

TEST_CASE("genome construction validates range and length")
{
    CHECK_THROWS_AS(g({}), std::invalid_argument);
    CHECK_THROWS_AS(g({ 0.5, 1.5 }), std::invalid_argument);
    CHECK_THROWS_AS(g({ -0.1 }), std::invalid_argument);
    CHECK_THROWS_AS(g({ std::nan("") }), std::invalid_argument);
    CHECK(g({ 0.0, 1.0 }).size() == 2);
}

TEST_CASE("crossover examples")
{
    auto const p = g({ 0.4, 0.8 });
    auto const q = g({ 0.6, 0.2 });
    auto const plus = cross({ &p, &q }, symbol_from_name("+"));
    CHECK(plus[0] == doctest::Approx(0.5));
    CHECK(plus[1] == doctest::Approx(0.5));

    auto const edge = g({ 0.0, 1.0 });
    auto const s = cross({ &edge }, symbol_from_name("sin"));
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 1.0);

    auto const h = g({ 0.5, 0.5 });
    auto const m = cross({ &h, &h }, symbol_from_name("*"));
    CHECK(m == g({ 0.25, 0.25 }));
}

TEST_CASE("crossover usage errors")
{
    auto const p = g({ 0.1, 0.2 });
    auto const q = g({ 0.1, 0.2, 0.3 });
    CHECK_THROWS_AS(cross({ &p }, symbol_from_name("+")), std::invalid_argument);
    CHECK_THROWS_AS(cross({ &p, &p }, symbol_from_name("sin")), std::invalid_argument);
    CHECK_THROWS_AS(cross({ &p, &q }, symbol_from_name("*")), std::invalid_argument);
    CHECK_THROWS_AS(cross({ &p, &p }, symbol_from_name("/")), std::invalid_argument);
    CHECK_THROWS_AS(cross({}, symbol_from_name("+")), std::invalid_argument);
}

TEST_CASE("crossover preserves length and acts gene-locally")
{
    RandomSource rng(7);
    for (auto sym : moo_function_set()) {
        for (int trial = 0; trial < 50; ++trial) {
            auto const a = insert_random(12, rng);
            auto const b = insert_random(12, rng);
            std::vector<double> bumped(a.genes().begin(), a.genes().end());
            auto const k = rng.index(bumped.size());
            bumped[k] = rng.uniform();
            auto const a2 = Genome(bumped);

            auto const base = sym.arity() == 2 ? cross({ &a, &b }, sym) : cross({ &a }, sym);
            auto const moved = sym.arity() == 2 ? cross({ &a2, &b }, sym) : cross({ &a2 }, sym);
            REQUIRE(base.size() == 12);
            for (std::size_t i = 0; i < base.size(); ++i) {
                if (i != k) {
                    CHECK(base[i] == moved[i]);
                }
            }
        }
    }
}

TEST_CASE("range closure on random tuples and endpoints")
{
    RandomSource rng(11);
    std::vector<double> inputs { 0.0, 1.0, std::nextafter(1.0, 0.0), std::nextafter(0.0, 1.0) };
    for (int i = 0; i < 20000; ++i) {
        inputs.push_back(rng.uniform());
    }
    for (auto sym : moo_function_set()) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            double const x = inputs[i];
            double const y = inputs[(i * 7919 + 3) % inputs.size()];
            double const v = sym.bounded_eval(x, y);
            REQUIRE(v >= 0.0);
            REQUIRE(v <= 1.0);
        }
    }
}

TEST_CASE("insert_random")
{
    RandomSource a(99);
    RandomSource b(99);
    CHECK(insert_random(3, a) == insert_random(3, b));

    RandomSource rng(1);
    auto const genome = insert_random(30, rng);
    CHECK(genome.size() == 30);
    for (auto v : genome.genes()) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    CHECK_THROWS_AS(insert_random(0, rng), std::invalid_argument);
}

TEST_CASE("pick_symbol")
{
    RandomSource rng(5);
    std::array<FunctionSymbol, 1> single { symbol_from_name("+") };
    for (int i = 0; i < 100; ++i) {
        CHECK(pick_symbol(rng, single) == single[0]);
    }
    CHECK_THROWS_AS(pick_symbol(rng, std::span<const FunctionSymbol> {}), std::invalid_argument);

    auto const set = moo_function_set();
    constexpr int draws = 100000;
    std::map<Op, int> counts;
    RandomSource r(2024);
    for (int i = 0; i < draws; ++i) {
        ++counts[pick_symbol(r, set).op()];
    }
    double chi2 = 0.0;
    for (auto s : set) {
        double const freq = counts[s.op()] / static_cast<double>(draws);
        CHECK(freq == doctest::Approx(0.2).epsilon(0.05)); // 0.2 ± 0.01
        double const expected = draws / 5.0;
        chi2 += (counts[s.op()] - expected) * (counts[s.op()] - expected) / expected;
    }
    // chi-square, 4 degrees of freedom, p = 0.001
    CHECK(chi2 < 18.467);

    RandomSource x(3);
    RandomSource y(3);
    for (int i = 0; i < 50; ++i) {
        CHECK(pick_symbol(x, set) == pick_symbol(y, set));
    }
}

TEST_CASE("random source")
{
    RandomSource rng(42);
    for (int i = 0; i < 1000; ++i) {
        auto const u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.index(7) < 7);
    }
    CHECK_THROWS_AS(rng.index(0), std::invalid_argument);
    CHECK(rng.seed() == 42);
}
