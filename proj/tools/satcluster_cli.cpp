// Command-line front end: runs scenario configs, validates them, renders SVG
// plots from emitted CSVs, and reproduces the full artifact set with an
// acceptance summary.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical/runtime failure,
// 4 acceptance-check failure in reproduce-all.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satcluster/scenario/acceptance.hpp"
#include "satcluster/scenario/config.hpp"
#include "satcluster/scenario/plot.hpp"
#include "satcluster/scenario/run.hpp"

namespace fs = std::filesystem;
namespace sc = satcluster;

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;
constexpr int kExitAcceptanceFailure = 4;

void print_report(const sc::RunReport& rep) {
    std::printf("scenario: %s\n", sc::scenario_kind_name(rep.kind).c_str());
    for (const sc::EmittedFile& f : rep.files)
        std::printf("  wrote %s  (fnv1a %016llx)\n", (rep.out_dir / f.name).string().c_str(),
                    static_cast<unsigned long long>(f.fnv1a));
    for (const auto& [key, value] : rep.headline)
        std::printf("  %s = %s\n", key.c_str(), value.c_str());
}

void emit_svgs(const sc::RunReport& rep) {
    for (const sc::EmittedFile& f : rep.files) {
        const fs::path csv = rep.out_dir / f.name;
        if (sc::csv_is_plottable(sc::read_csv(csv))) {
            const fs::path svg = sc::emit_plot(csv);
            std::printf("  wrote %s\n", svg.string().c_str());
        }
    }
}

int run_one(const std::string& config_path, const std::string& out_dir, bool force,
            unsigned threads, const std::string& format) {
    const sc::ScenarioConfig cfg = sc::load_scenario_config(config_path);
    const sc::RunReport rep = sc::run_scenario(cfg, out_dir, {force, threads});
    print_report(rep);
    if (format == "csv+svg") emit_svgs(rep);
    return 0;
}

int reproduce_all(const std::string& configs_dir, const std::string& out_dir, bool force,
                  unsigned threads, const std::string& format) {
    std::vector<fs::path> configs;
    if (!fs::is_directory(configs_dir))
        throw sc::ConfigError("configs directory not found: " + configs_dir);
    for (const auto& entry : fs::directory_iterator(configs_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            configs.push_back(entry.path());
    std::sort(configs.begin(), configs.end());
    if (configs.empty()) throw sc::ConfigError("no .json configs in " + configs_dir);

    for (const fs::path& path : configs) {
        const sc::ScenarioConfig cfg = sc::load_scenario_config(path);
        const sc::RunReport rep =
            sc::run_scenario(cfg, fs::path(out_dir) / path.stem(), {force, threads});
        print_report(rep);
        if (format == "csv+svg") emit_svgs(rep);
    }

    std::printf("\nacceptance summary:\n");
    const int unexpected = sc::print_acceptance_summary(sc::run_acceptance_checks(threads));
    return unexpected == 0 ? 0 : kExitAcceptanceFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-cluster feasibility toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", format = "csv";
    unsigned threads = 0;
    bool force = false;
    std::vector<std::string> csv_files;

    auto add_common = [&](CLI::App* cmd, bool with_config) {
        if (with_config) cmd->add_option("--config", config_path, "scenario config path");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_flag("--force", force, "overwrite existing outputs");
        cmd->add_option("--threads", threads, "worker threads (0 = hardware default)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "csv+svg"}));
    };

    CLI::App* cmd_run = app.add_subcommand("run", "execute one scenario config");
    add_common(cmd_run, true);
    cmd_run->get_option("--config")->required();

    CLI::App* cmd_validate =
        app.add_subcommand("validate", "schema/invariant check without execution");
    cmd_validate->add_option("--config", config_path, "scenario config path")->required();

    CLI::App* cmd_plot = app.add_subcommand("plot", "render SVG plots from emitted CSVs");
    cmd_plot->add_option("csv", csv_files, "CSV files produced by this toolkit")->required();

    CLI::App* cmd_repro = app.add_subcommand(
        "reproduce-all", "run every shipped scenario and print the acceptance summary");
    add_common(cmd_repro, true);
    // for reproduce-all, --config names the directory of shipped configs
    config_path = "configs";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (cmd_run->parsed()) return run_one(config_path, out_dir, force, threads, format);
        if (cmd_validate->parsed()) {
            sc::validate_scenario_config(sc::load_scenario_config(config_path));
            std::printf("ok\n");
            return 0;
        }
        if (cmd_plot->parsed()) {
            for (const std::string& csv : csv_files)
                std::printf("wrote %s\n", sc::emit_plot(csv).string().c_str());
            return 0;
        }
        if (cmd_repro->parsed())
            return reproduce_all(config_path, out_dir, force, threads, format);
    } catch (const sc::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumericalError;
    }
    return 0;
}
