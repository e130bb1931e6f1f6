#include "tgp/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace tgp {

namespace {
    using std::numbers::pi;

    void check_domain(std::span<const double> x, std::size_t m, char const* who, double tail_lo, double tail_hi)
    {
        if (x.size() != m) {
            throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(m) + " variables, got " + std::to_string(x.size()));
        }
        if (!(x[0] >= 0.0 && x[0] <= 1.0)) {
            throw std::invalid_argument(std::string(who) + ": x1 outside [0,1]");
        }
        for (std::size_t i = 1; i < m; ++i) {
            if (!(x[i] >= tail_lo && x[i] <= tail_hi)) {
                throw std::invalid_argument(std::string(who) + ": x" + std::to_string(i + 1) + " outside its range");
            }
        }
    }

    // 1 + 9 * sum_{i>=2} x_i / (m - 1)
    double linear_g(std::span<const double> x)
    {
        double sum = 0.0;
        for (std::size_t i = 1; i < x.size(); ++i) {
            sum += x[i];
        }
        return 1.0 + 9.0 * sum / static_cast<double>(x.size() - 1);
    }

    double zdt3_h(double f1) { return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * pi * f1); }

    double zdt6_f1(double x1)
    {
        return 1.0 - std::exp(-4.0 * x1) * std::pow(std::sin(6.0 * pi * x1), 6);
    }

    std::vector<Interval> sweep_zdt3_intervals()
    {
        constexpr std::size_t samples = 100001;
        std::vector<Interval> out;
        double best_f2 = std::numeric_limits<double>::infinity();
        bool in_run = false;
        for (std::size_t i = 0; i < samples; ++i) {
            double const f1 = static_cast<double>(i) / static_cast<double>(samples - 1);
            double const f2 = zdt3_h(f1);
            // samples arrive in increasing f1, so a point is nondominated iff it
            // improves strictly on every earlier f2
            bool const nondominated = f2 < best_f2;
            if (nondominated) {
                best_f2 = f2;
                if (!in_run) {
                    out.push_back({ f1, f1 });
                    in_run = true;
                }
                out.back().hi = f1;
            } else {
                in_run = false;
            }
        }
        return out;
    }

    double golden_section_min(auto&& f, double a, double b)
    {
        double const invphi = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - invphi * (b - a);
        double d = a + invphi * (b - a);
        for (int it = 0; it < 200 && (b - a) > 1e-15; ++it) {
            if (f(c) < f(d)) {
                b = d;
            } else {
                a = c;
            }
            c = b - invphi * (b - a);
            d = a + invphi * (b - a);
        }
        return (a + b) / 2.0;
    }

    double find_zdt6_argmin()
    {
        // coarse sweep to bracket the global minimum, then refine
        constexpr std::size_t samples = 10001;
        std::size_t best = 0;
        double best_v = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < samples; ++i) {
            double const v = zdt6_f1(static_cast<double>(i) / static_cast<double>(samples - 1));
            if (v < best_v) {
                best_v = v;
                best = i;
            }
        }
        double const h = 1.0 / static_cast<double>(samples - 1);
        double const lo = std::max(0.0, static_cast<double>(best) * h - h);
        double const hi = std::min(1.0, static_cast<double>(best) * h + h);
        return golden_section_min(zdt6_f1, lo, hi);
    }
} // namespace

ObjectivePoint zdt1_eval(std::span<const double> x)
{
    check_domain(x, 30, "zdt1", 0.0, 1.0);
    double const f1 = x[0];
    double const g = linear_g(x);
    return { f1, g * (1.0 - std::sqrt(f1 / g)) };
}

ObjectivePoint zdt2_eval(std::span<const double> x)
{
    check_domain(x, 30, "zdt2", 0.0, 1.0);
    double const f1 = x[0];
    double const g = linear_g(x);
    double const r = f1 / g;
    return { f1, g * (1.0 - r * r) };
}

ObjectivePoint zdt3_eval(std::span<const double> x)
{
    check_domain(x, 30, "zdt3", 0.0, 1.0);
    double const f1 = x[0];
    double const g = linear_g(x);
    double const r = f1 / g;
    return { f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * pi * f1)) };
}

ObjectivePoint zdt4_eval(std::span<const double> x)
{
    check_domain(x, 10, "zdt4", -5.0, 5.0);
    double const f1 = x[0];
    double g = 1.0 + 10.0 * static_cast<double>(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        g += x[i] * x[i] - 10.0 * std::cos(4.0 * pi * x[i]);
    }
    return { f1, g * (1.0 - std::sqrt(f1 / g)) };
}

ObjectivePoint zdt6_eval(std::span<const double> x)
{
    check_domain(x, 10, "zdt6", 0.0, 1.0);
    double const f1 = zdt6_f1(x[0]);
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        sum += x[i];
    }
    double const g = 1.0 + 9.0 * std::pow(sum / static_cast<double>(x.size() - 1), 0.25);
    double const r = f1 / g;
    return { f1, g * (1.0 - r * r) };
}

double zdt6_f1_argmin()
{
    static double const x = find_zdt6_argmin();
    return x;
}

double zdt6_f1_min()
{
    static double const v = zdt6_f1(zdt6_f1_argmin());
    return v;
}

std::span<const Interval> zdt3_front_intervals()
{
    static std::vector<Interval> const intervals = sweep_zdt3_intervals();
    return intervals;
}

Problem::Problem(ProblemId id)
    : id_(id)
{
    switch (id) {
    case ProblemId::Zdt1: name_ = "zdt1"; ranges_.assign(30, { 0.0, 1.0 }); break;
    case ProblemId::Zdt2: name_ = "zdt2"; ranges_.assign(30, { 0.0, 1.0 }); break;
    case ProblemId::Zdt3: name_ = "zdt3"; ranges_.assign(30, { 0.0, 1.0 }); break;
    case ProblemId::Zdt4:
        name_ = "zdt4";
        ranges_.assign(10, { -5.0, 5.0 });
        ranges_[0] = { 0.0, 1.0 };
        break;
    case ProblemId::Zdt6: name_ = "zdt6"; ranges_.assign(10, { 0.0, 1.0 }); break;
    }
    reference_ = true_front(200);
}

Problem Problem::by_name(std::string_view name)
{
    if (name == "zdt1") return Problem(ProblemId::Zdt1);
    if (name == "zdt2") return Problem(ProblemId::Zdt2);
    if (name == "zdt3") return Problem(ProblemId::Zdt3);
    if (name == "zdt4") return Problem(ProblemId::Zdt4);
    if (name == "zdt6") return Problem(ProblemId::Zdt6);
    throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

std::vector<double> Problem::decode(Genome const& genome) const
{
    if (genome.size() != ranges_.size()) {
        throw std::invalid_argument(name_ + ": genome has " + std::to_string(genome.size()) + " genes, expected " + std::to_string(ranges_.size()));
    }
    std::vector<double> x(genome.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto const [lo, hi] = ranges_[i];
        x[i] = (lo == 0.0 && hi == 1.0) ? genome[i] : lo + genome[i] * (hi - lo);
    }
    return x;
}

ObjectivePoint Problem::evaluate(std::span<const double> x) const
{
    switch (id_) {
    case ProblemId::Zdt1: return zdt1_eval(x);
    case ProblemId::Zdt2: return zdt2_eval(x);
    case ProblemId::Zdt3: return zdt3_eval(x);
    case ProblemId::Zdt4: return zdt4_eval(x);
    case ProblemId::Zdt6: return zdt6_eval(x);
    }
    return {};
}

std::vector<ObjectivePoint> Problem::true_front(std::size_t n_ref) const
{
    if (n_ref < 2) {
        throw std::invalid_argument("true_front: need at least 2 points");
    }
    std::vector<ObjectivePoint> out;
    out.reserve(n_ref);
    auto const steps = static_cast<double>(n_ref - 1);

    switch (id_) {
    case ProblemId::Zdt1:
    case ProblemId::Zdt4:
        for (std::size_t i = 0; i < n_ref; ++i) {
            double const f1 = static_cast<double>(i) / steps;
            out.push_back({ f1, 1.0 - std::sqrt(f1) });
        }
        break;
    case ProblemId::Zdt2:
        for (std::size_t i = 0; i < n_ref; ++i) {
            double const f1 = static_cast<double>(i) / steps;
            out.push_back({ f1, 1.0 - f1 * f1 });
        }
        break;
    case ProblemId::Zdt6: {
        double const lo = zdt6_f1_min();
        for (std::size_t i = 0; i < n_ref; ++i) {
            double const f1 = i + 1 == n_ref ? 1.0 : lo + (1.0 - lo) * static_cast<double>(i) / steps;
            out.push_back({ f1, 1.0 - f1 * f1 });
        }
        break;
    }
    case ProblemId::Zdt3: {
        // equidistant along the concatenation of the nondominated intervals
        auto const intervals = zdt3_front_intervals();
        double total = 0.0;
        for (auto const& iv : intervals) {
            total += iv.hi - iv.lo;
        }
        std::size_t seg = 0;
        double offset = 0.0; // concatenated length before intervals[seg]
        for (std::size_t i = 0; i < n_ref; ++i) {
            double const t = i + 1 == n_ref ? total : total * static_cast<double>(i) / steps;
            while (seg + 1 < intervals.size() && t > offset + (intervals[seg].hi - intervals[seg].lo)) {
                offset += intervals[seg].hi - intervals[seg].lo;
                ++seg;
            }
            double const f1 = i + 1 == n_ref ? intervals.back().hi : std::min(intervals[seg].hi, intervals[seg].lo + (t - offset));
            out.push_back({ f1, zdt3_h(f1) });
        }
        break;
    }
    }
    return out;
}

std::vector<std::string_view> problem_names()
{
    return { "zdt1", "zdt2", "zdt3", "zdt4", "zdt6" };
}

} // namespace tgp
