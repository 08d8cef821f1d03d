#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gwode/cli.hpp"
#include "gwode/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hybrid grey-wolf / differential-evolution optimization benchmark harness"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list-functions", "enumerate the function catalog");

    std::string spec_path;
    std::string out_dir = "results";
    int workers = gwode::default_workers();
    std::string format = "csv";
    auto* run_cmd = app.add_subcommand("run", "execute an experiment spec");
    run_cmd->add_option("--spec", spec_path, "experiment spec file")->required();
    run_cmd->add_option("--out", out_dir, "output directory");
    run_cmd->add_option("--workers", workers, "concurrent trials");
    run_cmd->add_option("--format", format, "table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string rank_results;
    std::string rank_out;
    auto* rank_cmd = app.add_subcommand("rank", "Friedman-rank a summary table");
    rank_cmd->add_option("--results", rank_results, "results directory or summary.csv path")
        ->required();
    rank_cmd->add_option("--out", rank_out, "output csv path (default: ranking.csv beside input)");

    std::string plot_results;
    std::string plot_kind;
    std::string plot_out;
    auto* plot_cmd = app.add_subcommand("export-plots", "emit plot-ready csv data");
    plot_cmd->add_option("--results", plot_results, "results directory")->required();
    plot_cmd->add_option("--kind", plot_kind, "box or convergence")
        ->required()
        ->check(CLI::IsMember({"box", "convergence"}));
    plot_cmd->add_option("--out", plot_out, "output directory (default: results directory)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? gwode::kExitOk : gwode::kExitValidation;
    }

    try {
        if (list_cmd->parsed()) return gwode::cmd_list_functions(std::cout);
        if (run_cmd->parsed()) {
            const gwode::ExperimentSpec spec =
                gwode::parse_spec(gwode::read_text_file(spec_path));
            const auto fmt =
                format == "json" ? gwode::OutputFormat::json : gwode::OutputFormat::csv;
            return gwode::cmd_run(spec, out_dir, workers, fmt, std::cout);
        }
        if (rank_cmd->parsed()) return gwode::cmd_rank(rank_results, rank_out, std::cout);
        if (plot_cmd->parsed()) {
            const auto kind =
                plot_kind == "box" ? gwode::PlotKind::box : gwode::PlotKind::convergence;
            return gwode::cmd_export_plots(plot_results, kind, plot_out, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gwode::exit_status_for(e);
    }
    return gwode::kExitInternal;
}
