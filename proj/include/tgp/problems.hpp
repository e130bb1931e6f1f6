#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgp/core.hpp"

namespace tgp {

struct ObjectivePoint {
    double f1 { 0.0 };
    double f2 { 0.0 };

    friend bool operator==(ObjectivePoint const&, ObjectivePoint const&) = default;
};

struct VariableRange {
    double lo { 0.0 };
    double hi { 1.0 };
};

// Direct objective evaluators. Each validates the vector length and the
// domain of every component and throws std::invalid_argument on violation.
ObjectivePoint zdt1_eval(std::span<const double> x);
ObjectivePoint zdt2_eval(std::span<const double> x);
ObjectivePoint zdt3_eval(std::span<const double> x);
ObjectivePoint zdt4_eval(std::span<const double> x);
ObjectivePoint zdt6_eval(std::span<const double> x);

// x1 in [0, 1] minimizing ZDT6's f1, and the minimum itself.
double zdt6_f1_argmin();
double zdt6_f1_min();

// Nondominated f1-intervals of the ZDT3 front, found once by a dense sweep.
struct Interval {
    double lo;
    double hi;
};
std::span<const Interval> zdt3_front_intervals();

enum class ProblemId { Zdt1, Zdt2, Zdt3, Zdt4, Zdt6 };

/// A biobjective ZDT benchmark: genes in [0,1]^m are decoded affinely to the
/// problem's variable ranges and evaluated into (f1, f2).
class Problem {
public:
    explicit Problem(ProblemId id);

    /// "zdt1" ... "zdt6"; throws std::invalid_argument for unknown names.
    static Problem by_name(std::string_view name);

    ProblemId id() const noexcept { return id_; }
    std::string const& name() const noexcept { return name_; }
    std::size_t gene_count() const noexcept { return ranges_.size(); }
    std::span<const VariableRange> ranges() const noexcept { return ranges_; }

    std::vector<double> decode(Genome const& genome) const;
    ObjectivePoint evaluate(std::span<const double> x) const;
    ObjectivePoint evaluate(Genome const& genome) const { return evaluate(decode(genome)); }

    /// `n_ref` points equidistant in f1 on the Pareto-optimal front (g = 1),
    /// sorted by strictly increasing f1. Requires n_ref >= 2.
    std::vector<ObjectivePoint> true_front(std::size_t n_ref = 200) const;

    /// The 200-point front used as the metric reference, computed once.
    std::vector<ObjectivePoint> const& reference_front() const noexcept { return reference_; }

private:
    ProblemId id_;
    std::string name_;
    std::vector<VariableRange> ranges_;
    std::vector<ObjectivePoint> reference_;
};

std::vector<std::string_view> problem_names();

} // namespace tgp
