// Command-line harness for traceless GP on the ZDT suite.
//
//   tgp run --problem zdt1 --variant archive --runs 30 --seed 42 --out results/zdt1
//   tgp front --problem zdt3 --out fronts
//   tgp compare results/*/summary.json --baseline data/baseline_tables.csv

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgp/experiment.hpp"

namespace {

std::vector<tgp::FunctionSymbol> parse_functions(std::string const& list)
{
    std::vector<tgp::FunctionSymbol> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(tgp::symbol_from_name(item));
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "Traceless genetic programming for biobjective ZDT benchmarks" };
    app.require_subcommand(1);

    tgp::ExperimentSpec spec;
    std::string variant = "archive";
    std::string format = "csv";
    std::string functions;
    std::size_t archive_capacity = 100;
    auto* run = app.add_subcommand("run", "Execute a seeded batch of runs");
    run->add_option("--problem", spec.problem, "zdt1, zdt2, zdt3, zdt4 or zdt6")->capture_default_str();
    run->add_option("--variant", variant, "plain, archive or classic")->capture_default_str();
    run->add_option("--runs", spec.config.runs, "Number of independent runs")->capture_default_str();
    run->add_option("--pop-size", spec.config.pop_size, "Population size")->capture_default_str();
    run->add_option("--generations", spec.config.generations, "Number of generations")->capture_default_str();
    run->add_option("--p-insert", spec.config.p_insert, "Insertion probability")->capture_default_str();
    run->add_option("--archive-capacity", archive_capacity, "Archive size (archive variant)")->capture_default_str();
    run->add_option("--metric-stride", spec.config.metric_stride, "Generations between metric samples")->capture_default_str();
    run->add_option("--tournament-size", spec.config.tournament_size, "Tournament size (classic variant)")->capture_default_str();
    run->add_option("--functions", functions, "Comma-separated function set, e.g. +,-,*,sin,exp");
    run->add_option("--seed", spec.config.seed, "Base seed; run i uses seed + i")->capture_default_str();
    run->add_option("--out", spec.out_dir, "Output directory")->capture_default_str();
    run->add_option("--format", format, "Per-run output format: csv or json")->check(CLI::IsMember({ "csv", "json" }))->capture_default_str();
    run->add_option("--cases", spec.cases_file, "Fitness-case CSV (v1,...,vn,f) for the classic variant");
    run->add_flag("--timing", spec.record_timing, "Record wall-clock seconds in summary.json");
    run->add_option("--threads", spec.threads, "Worker threads (0 = all cores)")->capture_default_str();

    std::string front_problem;
    std::string front_out = ".";
    std::size_t front_points = 200;
    auto* front = app.add_subcommand("front", "Write the reference Pareto front as CSV");
    front->add_option("--problem", front_problem, "Problem name")->required();
    front->add_option("--out", front_out, "Output directory")->capture_default_str();
    front->add_option("--points", front_points, "Number of reference points")->capture_default_str();

    std::vector<std::string> summaries;
    std::string baseline;
    std::string table_out;
    auto* compare = app.add_subcommand("compare", "Tabulate run summaries against baseline results");
    compare->add_option("summaries", summaries, "summary.json files")->required();
    compare->add_option("--baseline", baseline, "Baseline CSV (problem,method,cm,dm)");
    compare->add_option("--out", table_out, "Also write the table to this file");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return tgp::kExitUsage;
    }

    if (*run) {
        try {
            spec.variant = tgp::variant_from_name(variant);
            if (!functions.empty()) {
                spec.config.function_set = parse_functions(functions);
            } else if (spec.variant == tgp::Variant::Classic) {
                spec.config.function_set = tgp::classic_function_set();
            }
        } catch (std::invalid_argument const& e) {
            std::cerr << "error: " << e.what() << "\n";
            return tgp::kExitUsage;
        }
        if (spec.variant == tgp::Variant::Archive) {
            spec.config.archive_capacity = archive_capacity;
        }
        if (spec.variant == tgp::Variant::Classic && spec.cases_file.empty()) {
            std::cerr << "error: the classic variant needs --cases\n";
            return tgp::kExitUsage;
        }
        spec.format = format == "json" ? tgp::OutputFormat::Json : tgp::OutputFormat::Csv;
        return tgp::cmd_run(spec, std::cout, std::cerr);
    }
    if (*front) {
        return tgp::cmd_front(front_problem, front_out, front_points, std::cout, std::cerr);
    }
    std::vector<std::filesystem::path> files(summaries.begin(), summaries.end());
    std::optional<std::filesystem::path> base;
    if (!baseline.empty()) {
        base = baseline;
    }
    std::optional<std::filesystem::path> table;
    if (!table_out.empty()) {
        table = table_out;
    }
    return tgp::cmd_compare(files, base, table, std::cout, std::cerr);
}
