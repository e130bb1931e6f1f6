#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tgp/engine.hpp"

namespace tgp {

enum class OutputFormat { Csv, Json };

struct ExperimentSpec {
    std::string problem { "zdt1" };
    Variant variant { Variant::Archive };
    AlgoConfig config {};
    std::filesystem::path out_dir { "results" };
    OutputFormat format { OutputFormat::Csv };
    std::filesystem::path cases_file {}; // classic variant only
    bool record_timing { false };        // wall-clock seconds in summary.json
    unsigned threads { 0 };
};

// Exit codes shared by the commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Executes the seeded batch described by `spec` and writes per-run fronts,
/// per-run metric series and summary.json into spec.out_dir. A one-line
/// summary goes to `out`, diagnostics to `err`.
int cmd_run(ExperimentSpec const& spec, std::ostream& out, std::ostream& err);

/// Writes front_<problem>.csv holding `points` reference points.
int cmd_front(std::string const& problem, std::filesystem::path const& out_dir, std::size_t points, std::ostream& out, std::ostream& err);

/// Renders a per-problem CM/DM table from run summaries, flagging where TGP
/// beats the baseline methods when a baseline file is given. The table goes
/// to `out` and, if `table_file` is set, to that file as well.
int cmd_compare(std::vector<std::filesystem::path> const& summaries, std::optional<std::filesystem::path> const& baseline,
    std::optional<std::filesystem::path> const& table_file, std::ostream& out, std::ostream& err);

// --- file helpers, exposed for tests ---

struct BaselineRow {
    std::string problem;
    std::string method;
    double cm;
    double dm;
};

/// Parses `problem,method,cm,dm` rows; '#' lines are comments and the first
/// non-comment line is the header. Throws std::runtime_error naming the line
/// and column on malformed input.
std::vector<BaselineRow> read_baseline(std::filesystem::path const& file);

/// Reads a headed numeric CSV (generation,cm,dm or f1,f2 ...).
std::vector<std::vector<double>> read_numeric_csv(std::filesystem::path const& file, bool has_header = true);

std::filesystem::path default_baseline_file();

} // namespace tgp
