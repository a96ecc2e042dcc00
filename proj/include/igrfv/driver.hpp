#pragma once

#include "igrfv/config.hpp"
#include "igrfv/diagnostics.hpp"
#include "igrfv/exec.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace igrfv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitBlowUp = 2;

inline constexpr const char* kOutputDirEnv = "IGRFV_OUTPUT_DIR";

std::string version_string();

struct Snapshot {
    double t = 0.0;
    ConservedField field;
    std::vector<double> sigma;  // interior cells; zeros for non-IGR schemes
};

struct SimulationOutcome {
    BuiltCase built;
    std::vector<Snapshot> snapshots;  // ascending in t, last one at t_final
    std::vector<StepRecord> history;
    RunSummary summary;
    std::optional<std::string> failure;  // set when the run blew up
};

// Builds the case and marches it to t_final, capturing snapshots at the
// requested times (t_final is always included).
SimulationOutcome simulate(const RunConfig& cfg, const std::vector<double>& snapshot_times,
                           Exec exec = Exec::parallel);

// Snapshot CSV: 1D `x,rho,u,p,E,sigma`, 2D `x,y,rho,u,v,p,E,sigma`,
// one row per interior cell, 17 significant digits.
void write_snapshot_csv(const std::filesystem::path& path, const Snapshot& snap);

// `run` subcommand: writes snapshots, optional series CSV and run_report.json
// into out_dir. Returns kExitOk or kExitBlowUp.
int run(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log,
        Exec exec = Exec::parallel);

struct StudyRow {
    double h = 0.0;       // grid spacing, or alpha for alpha_sweep
    double alpha = 0.0;
    int resolution = 0;
    double err_rho = 0.0;
    double err_mom = 0.0;
    double err_E = 0.0;
    double err_sum = 0.0;
    double order = 0.0;   // vs the previous row; NaN for the first
};

struct StudyTable {
    double t = 0.0;
    std::vector<StudyRow> rows;
};

// Convergence study in one of the three regimes. Errors are L1 in
// (rho, rho*u, E) against a finer self-reference (fixed_alpha, joint) or the
// smallest-alpha run (alpha_sweep). One table per evaluation time.
std::vector<StudyTable> run_convergence_study(const RunConfig& cfg, std::ostream& log,
                                              Exec exec = Exec::parallel);

void write_study_csv(const std::filesystem::path& path, const StudyTable& table,
                     StudyRegime regime);

// Resolves the output directory: $IGRFV_OUTPUT_DIR wins over cfg.output.dir.
std::filesystem::path output_directory(const RunConfig& cfg);

} // namespace igrfv
