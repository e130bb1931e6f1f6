#include "tgp/core.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tgp {

namespace {
    double const kSinOne = std::sin(1.0);
    double const kExpOne = std::numbers::e;

    template<typename Vec, typename Fn>
    std::vector<double> apply_elementwise(std::span<const Vec* const> parents, int arity, Fn&& fn)
    {
        if (parents.size() != static_cast<std::size_t>(arity)) {
            throw std::invalid_argument("crossover: expected " + std::to_string(arity) + " parent(s), got " + std::to_string(parents.size()));
        }
        auto const m = parents.front()->size();
        for (auto const* p : parents) {
            if (p->size() != m) {
                throw std::invalid_argument("crossover: parents differ in length");
            }
        }
        std::vector<double> out(m);
        if (arity == 1) {
            auto const& a = *parents[0];
            for (std::size_t k = 0; k < m; ++k) {
                out[k] = fn(a[k], 0.0);
            }
        } else {
            auto const& a = *parents[0];
            auto const& b = *parents[1];
            for (std::size_t k = 0; k < m; ++k) {
                out[k] = fn(a[k], b[k]);
            }
        }
        return out;
    }
} // namespace

Genome::Genome(std::vector<double> genes)
    : genes_(std::move(genes))
{
    if (genes_.empty()) {
        throw std::invalid_argument("Genome: gene count must be positive");
    }
    for (auto g : genes_) {
        if (!(g >= 0.0 && g <= 1.0)) {
            throw std::invalid_argument("Genome: gene outside [0,1]");
        }
    }
}

double bounded_add(double x, double y) { return (x + y) / 2.0; }
double bounded_sub(double x, double y) { return std::abs(x - y); }
double bounded_mul(double x, double y) { return x * y; }
double bounded_sin(double x) { return std::sin(x) / kSinOne; }
double bounded_exp(double x) { return std::exp(x) / kExpOne; }

double protected_div(double x, double y)
{
    return std::abs(y) < 1e-9 ? x : x / y;
}

std::string_view FunctionSymbol::name() const noexcept
{
    switch (op_) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Sin: return "sin";
    case Op::Exp: return "exp";
    }
    return "?";
}

int FunctionSymbol::arity() const noexcept
{
    return (op_ == Op::Sin || op_ == Op::Exp) ? 1 : 2;
}

double FunctionSymbol::bounded_eval(double x, double y) const
{
    switch (op_) {
    case Op::Add: return bounded_add(x, y);
    case Op::Sub: return bounded_sub(x, y);
    case Op::Mul: return bounded_mul(x, y);
    case Op::Sin: return bounded_sin(x);
    case Op::Exp: return bounded_exp(x);
    case Op::Div: break;
    }
    throw std::invalid_argument("'/' has no bounded form");
}

double FunctionSymbol::raw_eval(double x, double y) const
{
    switch (op_) {
    case Op::Add: return x + y;
    case Op::Sub: return x - y;
    case Op::Mul: return x * y;
    case Op::Div: return protected_div(x, y);
    case Op::Sin: return std::sin(x);
    case Op::Exp: return std::exp(x);
    }
    return 0.0;
}

FunctionSymbol symbol_from_name(std::string_view name)
{
    static constexpr std::array<std::pair<std::string_view, Op>, 6> table { {
        { "+", Op::Add }, { "-", Op::Sub }, { "*", Op::Mul }, { "/", Op::Div }, { "sin", Op::Sin }, { "exp", Op::Exp },
    } };
    for (auto const& [n, op] : table) {
        if (n == name) {
            return FunctionSymbol(op);
        }
    }
    throw std::invalid_argument("unknown function symbol '" + std::string(name) + "'");
}

std::vector<FunctionSymbol> moo_function_set()
{
    return { FunctionSymbol(Op::Add), FunctionSymbol(Op::Sub), FunctionSymbol(Op::Mul), FunctionSymbol(Op::Sin), FunctionSymbol(Op::Exp) };
}

std::vector<FunctionSymbol> classic_function_set()
{
    return { FunctionSymbol(Op::Add), FunctionSymbol(Op::Sub), FunctionSymbol(Op::Mul), FunctionSymbol(Op::Div), FunctionSymbol(Op::Sin) };
}

Genome crossover(std::span<const Genome* const> parents, FunctionSymbol symbol)
{
    if (!symbol.has_bounded()) {
        throw std::invalid_argument("crossover: symbol '/' is not available on bounded genomes");
    }
    if (parents.empty()) {
        throw std::invalid_argument("crossover: no parents");
    }
    std::vector<double> genes;
    switch (symbol.op()) {
    case Op::Add: genes = apply_elementwise(parents, 2, bounded_add); break;
    case Op::Sub: genes = apply_elementwise(parents, 2, bounded_sub); break;
    case Op::Mul: genes = apply_elementwise(parents, 2, bounded_mul); break;
    case Op::Sin: genes = apply_elementwise(parents, 1, [](double x, double) { return bounded_sin(x); }); break;
    case Op::Exp: genes = apply_elementwise(parents, 1, [](double x, double) { return bounded_exp(x); }); break;
    case Op::Div: break;
    }
    return Genome(std::move(genes));
}

std::vector<double> crossover_raw(std::span<const std::vector<double>* const> parents, FunctionSymbol symbol)
{
    if (parents.empty()) {
        throw std::invalid_argument("crossover: no parents");
    }
    return apply_elementwise(parents, symbol.arity(), [symbol](double x, double y) { return symbol.raw_eval(x, y); });
}

Genome insert_random(std::size_t m, RandomSource& rng)
{
    if (m == 0) {
        throw std::invalid_argument("insert_random: gene count must be positive");
    }
    std::vector<double> genes(m);
    for (auto& g : genes) {
        g = rng.uniform();
    }
    return Genome(std::move(genes));
}

FunctionSymbol pick_symbol(RandomSource& rng, std::span<const FunctionSymbol> set)
{
    if (set.empty()) {
        throw std::invalid_argument("pick_symbol: empty function set");
    }
    return set[rng.index(set.size())];
}

} // namespace tgp
