#include "igrfv/config.hpp"
#include "igrfv/driver.hpp"
#include "igrfv/errors.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int list_cases() {
    for (const std::string& name : igrfv::case_names()) {
        std::cout << name << "  (" << igrfv::case_dimension(name) << "D)";
        const auto params = igrfv::case_parameters(name);
        if (!params.empty()) {
            std::cout << "  params:";
            for (const auto& p : params) std::cout << ' ' << p;
        }
        std::cout << '\n';
    }
    return igrfv::kExitOk;
}

int study(const igrfv::RunConfig& cfg) {
    if (!cfg.study) {
        std::cerr << "error: configuration has no [study] section\n";
        return igrfv::kExitConfigError;
    }
    const auto dir = igrfv::output_directory(cfg);
    std::filesystem::create_directories(dir);
    const auto tables = igrfv::run_convergence_study(cfg, std::cerr);
    for (const auto& table : tables) {
        char tag[40];
        std::snprintf(tag, sizeof tag, "%.6g", table.t);
        const auto path = dir / ("study_" + std::string(igrfv::to_string(cfg.study->regime)) +
                                 "_t" + tag + ".csv");
        igrfv::write_study_csv(path, table, cfg.study->regime);
        std::cout << "t = " << table.t << "  (" << path.string() << ")\n";
        for (const auto& row : table.rows) {
            std::printf("  m=%-6d alpha=%-10.4g err=%-12.5g order=%s\n", row.resolution, row.alpha,
                        row.err_sum,
                        std::isnan(row.order) ? "-" : std::to_string(row.order).c_str());
        }
    }
    return igrfv::kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"IGR finite-volume solver for the 1D/2D Euler equations"};
    app.require_subcommand(0, 1);
    bool show_version = false;
    app.add_flag("--version", show_version, "Print the version and exit");

    std::string run_path;
    std::vector<std::string> overrides;
    CLI::App* run_cmd = app.add_subcommand("run", "Run one configuration");
    run_cmd->add_option("config", run_path, "Config file")->required();
    run_cmd->add_option("--override", overrides, "section.key=value (repeatable)");

    std::string study_path;
    CLI::App* study_cmd = app.add_subcommand("study", "Run a convergence study");
    study_cmd->add_option("config", study_path, "Config file")->required();
    study_cmd->add_option("--override", overrides, "section.key=value (repeatable)");

    CLI::App* cases_cmd = app.add_subcommand("cases", "List the benchmark cases");
    app.footer(std::string("Output directory: [output] dir, or $") + igrfv::kOutputDirEnv +
               " when set.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? igrfv::kExitOk : igrfv::kExitConfigError;
    }

    if (show_version) {
        std::cout << igrfv::version_string() << '\n';
        return igrfv::kExitOk;
    }
    if (cases_cmd->parsed()) return list_cases();
    if (!run_cmd->parsed() && !study_cmd->parsed()) {
        std::cerr << app.help();
        return igrfv::kExitConfigError;
    }
    const bool is_study = study_cmd->parsed();

    igrfv::RunConfig cfg;
    try {
        cfg = igrfv::parse_config(read_file(is_study ? study_path : run_path), overrides);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return igrfv::kExitConfigError;
    }

    try {
        if (is_study) return study(cfg);
        return igrfv::run(cfg, igrfv::output_directory(cfg), std::cerr);
    } catch (const igrfv::NonPhysicalState& e) {
        std::cerr << "blow-up: " << e.describe() << '\n';
        return igrfv::kExitBlowUp;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return igrfv::kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return igrfv::kExitBlowUp;
    }
}
