#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tgp/random.hpp"

namespace tgp {

/// A TGP individual: the output vector of an (unstored) expression, one gene
/// per fitness case or decision variable. Genes live in [0, 1] and the length
/// is fixed at construction.
class Genome {
public:
    /// Throws std::invalid_argument when `genes` is empty or any gene lies
    /// outside [0, 1].
    explicit Genome(std::vector<double> genes);

    std::size_t size() const noexcept { return genes_.size(); }
    double operator[](std::size_t k) const { return genes_[k]; }
    std::span<const double> genes() const noexcept { return genes_; }

    friend bool operator==(Genome const&, Genome const&) = default;

private:
    std::vector<double> genes_;
};

// Domain-closed operator redefinitions: each maps [0,1]^arity into [0,1].
double bounded_add(double x, double y);
double bounded_sub(double x, double y);
double bounded_mul(double x, double y);
double bounded_sin(double x);
double bounded_exp(double x);

// Classic-mode division: returns the numerator when the denominator is
// within 1e-9 of zero.
double protected_div(double x, double y);

enum class Op { Add, Sub, Mul, Div, Sin, Exp };

class FunctionSymbol {
public:
    constexpr explicit FunctionSymbol(Op op) noexcept : op_(op) {}

    constexpr Op op() const noexcept { return op_; }
    std::string_view name() const noexcept;
    int arity() const noexcept;

    // Division has no [0,1]-closed redefinition.
    bool has_bounded() const noexcept { return op_ != Op::Div; }

    double bounded_eval(double x, double y = 0.0) const;
    double raw_eval(double x, double y = 0.0) const;

    friend constexpr bool operator==(FunctionSymbol, FunctionSymbol) = default;

private:
    Op op_;
};

/// Looks up a symbol by its name ("+", "-", "*", "/", "sin", "exp").
FunctionSymbol symbol_from_name(std::string_view name);

/// {+, -, *, sin, exp}: the multiobjective operator set.
std::vector<FunctionSymbol> moo_function_set();

/// {+, -, *, /, sin}: the classic symbolic-regression operator set.
std::vector<FunctionSymbol> classic_function_set();

/// Elementwise application of `symbol` (bounded form) across the parents.
/// The number of parents must equal the symbol's arity and all parents must
/// share one length; violations throw std::invalid_argument.
Genome crossover(std::span<const Genome* const> parents, FunctionSymbol symbol);

/// Same as crossover() on unconstrained output vectors using the raw
/// operator semantics.
std::vector<double> crossover_raw(std::span<const std::vector<double>* const> parents, FunctionSymbol symbol);

/// Insertion: a fresh genome of `m` independent uniform draws.
Genome insert_random(std::size_t m, RandomSource& rng);

/// Uniform choice from a nonempty symbol set.
FunctionSymbol pick_symbol(RandomSource& rng, std::span<const FunctionSymbol> set);

} // namespace tgp
