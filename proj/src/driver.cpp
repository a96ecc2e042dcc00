#include "igrfv/driver.hpp"

#include "igrfv/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace igrfv {

std::string version_string() { return "igrfv 1.0.0"; }

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string time_tag(double t) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", t);
    return buf;
}

Snapshot take_snapshot(Solver& solver) {
    Snapshot s;
    s.t = solver.time();
    s.field = solver.field();
    const SigmaField& sig = solver.current_sigma();
    s.sigma = sig.values;
    if (s.sigma.size() != solver.field().grid().interior_count())
        s.sigma.assign(solver.field().grid().interior_count(), 0.0);
    return s;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

void write_series_csv(const std::filesystem::path& path, const std::vector<StepRecord>& history,
                      int stride) {
    std::ofstream out = open_out(path);
    out << "step,t,dt,min_rho,min_p,max_speed,sigma_sweeps,sigma_residual,mass,mom_x,mom_y,energy\n";
    for (std::size_t k = 0; k < history.size(); ++k) {
        const StepRecord& r = history[k];
        if (r.step % stride != 0 && k + 1 != history.size()) continue;
        out << r.step << ',' << fmt17(r.t) << ',' << fmt17(r.dt) << ',' << fmt17(r.min_rho) << ','
            << fmt17(r.min_p) << ',' << fmt17(r.max_speed) << ',' << r.sigma_sweeps << ','
            << fmt17(r.sigma_residual) << ',' << fmt17(r.totals.mass) << ','
            << fmt17(r.totals.momentum[0]) << ',' << fmt17(r.totals.momentum[1]) << ','
            << fmt17(r.totals.energy) << '\n';
    }
}

void write_report_json(const std::filesystem::path& path, const RunConfig& cfg,
                       const SimulationOutcome& o) {
    const RunSummary& s = o.summary;
    auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
    const nlohmann::json report = {
        {"case", cfg.case_name},
        {"scheme", std::string(to_string(cfg.scheme.scheme))},
        {"resolution", cfg.resolution},
        {"steps", s.steps},
        {"t_end", num(s.t_end)},
        {"min_rho", num(s.min_rho)},
        {"min_p", num(s.min_p)},
        {"max_speed", num(s.max_speed)},
        {"max_sigma_sweeps", s.max_sigma_sweeps},
        {"max_sigma_residual", num(s.max_sigma_residual)},
        {"mass_drift", num(s.mass_drift)},
        {"momentum_drift", num(s.momentum_drift)},
        {"energy_drift", num(s.energy_drift)},
        {"wall_seconds", num(s.wall_seconds)},
        {"aborted", s.aborted},
        {"abort_step", s.abort_step},
        {"abort_cause", s.abort_cause},
    };
    std::ofstream out = open_out(path);
    out << report.dump(2) << '\n';
}

} // namespace

SimulationOutcome simulate(const RunConfig& cfg, const std::vector<double>& snapshot_times,
                           Exec exec) {
    const auto start = std::chrono::steady_clock::now();
    SimulationOutcome out{build_case(cfg.case_name, cfg.resolution, cfg.overrides), {}, {}, {}, {}};
    const double t_final = out.built.spec.t_final;
    std::vector<double> times;
    for (double t : snapshot_times) {
        if (t < t_final) times.push_back(t);
    }
    std::sort(times.begin(), times.end());
    times.push_back(t_final);

    Solver solver(out.built.field, cfg.scheme, out.built.bc, exec);
    const Invariants initial = total_invariants(solver.field());
    const Invariants scale = invariant_scales(solver.field());
    try {
        for (double t : times) {
            solver.advance_to(t, [&](const StepRecord& r) { out.history.push_back(r); });
            out.snapshots.push_back(take_snapshot(solver));
        }
    } catch (const NonPhysicalState& e) {
        out.failure = e.describe();
    }
    out.summary = run_report(out.history, initial, scale);
    if (out.failure) {
        out.summary.aborted = true;
        out.summary.abort_step = solver.steps() + 1;
        out.summary.abort_cause = *out.failure;
    }
    out.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void write_snapshot_csv(const std::filesystem::path& path, const Snapshot& snap) {
    const ConservedField& f = snap.field;
    const Grid& g = f.grid();
    std::ofstream out = open_out(path);
    out << (g.dim == 2 ? "x,y,rho,u,v,p,E,sigma\n" : "x,rho,u,p,E,sigma\n");
    std::size_t k = 0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i, ++k) {
            const ConservedState u = f.state(i, j);
            const PrimitiveState w = cons_to_prim(u, f.eos());
            out << fmt17(g.center(0, i)) << ',';
            if (g.dim == 2) out << fmt17(g.center(1, j)) << ',';
            out << fmt17(w.rho) << ',' << fmt17(w.vel[0]) << ',';
            if (g.dim == 2) out << fmt17(w.vel[1]) << ',';
            out << fmt17(w.p) << ',' << fmt17(u.E) << ',' << fmt17(snap.sigma[k]) << '\n';
        }
    }
}

int run(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log, Exec exec) {
    std::filesystem::create_directories(out_dir);
    log << "run " << cfg.case_name << " scheme=" << to_string(cfg.scheme.scheme)
        << " m=" << cfg.resolution << '\n';
    const SimulationOutcome o = simulate(cfg, cfg.output.times, exec);
    for (std::size_t k = 0; k < o.snapshots.size(); ++k) {
        const Snapshot& s = o.snapshots[k];
        const auto path = out_dir / ("snapshot_" + std::to_string(k) + "_t" + time_tag(s.t) + ".csv");
        write_snapshot_csv(path, s);
        log << "  wrote " << path.string() << '\n';
    }
    if (cfg.output.series_stride > 0)
        write_series_csv(out_dir / "series.csv", o.history, cfg.output.series_stride);
    write_report_json(out_dir / "run_report.json", cfg, o);
    log << "  steps=" << o.summary.steps << " t=" << o.summary.t_end
        << " min_rho=" << o.summary.min_rho << " min_p=" << o.summary.min_p
        << " wall=" << o.summary.wall_seconds << "s\n";
    if (o.failure) {
        log << "  blow-up: " << *o.failure << '\n';
        return kExitBlowUp;
    }
    return kExitOk;
}

std::vector<StudyTable> run_convergence_study(const RunConfig& cfg, std::ostream& log, Exec exec) {
    if (!cfg.study) throw std::invalid_argument("configuration has no [study] section");
    const StudyConfig& st = *cfg.study;

    struct Member {
        int m;
        double alpha;
    };
    auto alpha_for = [&](int m) {
        const Grid g = build_case(cfg.case_name, m, cfg.overrides).grid;
        const double h = g.max_spacing();
        return st.regime == StudyRegime::joint ? st.joint_factor * h * h : st.alpha;
    };
    std::vector<Member> members;
    Member reference{};
    if (st.regime == StudyRegime::alpha_sweep) {
        for (double a : st.alphas) members.push_back({cfg.resolution, a});
        reference = members.back();
        members.pop_back();
    } else {
        for (int m : st.resolutions) members.push_back({m, alpha_for(m)});
        const int mref = st.reference_resolution > 0 ? st.reference_resolution : 4 * st.resolutions.back();
        reference = {mref, alpha_for(mref)};
    }

    RunConfig base = cfg;
    base.study.reset();
    const std::vector<double> times = st.times;
    // The last evaluation time ends every member run.
    if (!times.empty()) base.overrides.t_final = *std::max_element(times.begin(), times.end());

    auto simulate_member = [&](const Member& mb) {
        RunConfig rc = base;
        rc.resolution = mb.m;
        rc.scheme.alpha = mb.alpha;
        log << "study run m=" << mb.m << " alpha=" << mb.alpha << std::endl;
        SimulationOutcome o = simulate(rc, times, exec);
        if (o.failure) throw std::runtime_error("study run blew up: " + *o.failure);
        return o;
    };

    const SimulationOutcome ref = simulate_member(reference);
    std::vector<StudyTable> tables(ref.snapshots.size());
    for (std::size_t k = 0; k < tables.size(); ++k) tables[k].t = ref.snapshots[k].t;

    for (const Member& mb : members) {
        const SimulationOutcome o = simulate_member(mb);
        for (std::size_t k = 0; k < tables.size(); ++k) {
            const ConservedField& f = o.snapshots[k].field;
            const ConservedField& rf = ref.snapshots[k].field;
            StudyRow row;
            row.resolution = mb.m;
            row.alpha = mb.alpha;
            row.h = st.regime == StudyRegime::alpha_sweep ? mb.alpha : f.grid().max_spacing();
            row.err_rho = error_norm(f, rf, Quantity::rho, Norm::L1);
            row.err_mom = error_norm(f, rf, Quantity::momentum, Norm::L1);
            row.err_E = error_norm(f, rf, Quantity::E, Norm::L1);
            row.err_sum = row.err_rho + row.err_mom + row.err_E;
            row.order = std::numeric_limits<double>::quiet_NaN();
            if (!tables[k].rows.empty()) {
                const StudyRow& prev = tables[k].rows.back();
                row.order = std::log(prev.err_sum / row.err_sum) / std::log(prev.h / row.h);
            }
            tables[k].rows.push_back(row);
        }
    }
    return tables;
}

void write_study_csv(const std::filesystem::path& path, const StudyTable& table,
                     StudyRegime regime) {
    std::ofstream out = open_out(path);
    out << (regime == StudyRegime::alpha_sweep ? "alpha" : "h")
        << ",alpha,m,err_rho,err_mom,err_E,err_sum,order\n";
    for (const StudyRow& r : table.rows) {
        out << fmt17(r.h) << ',' << fmt17(r.alpha) << ',' << r.resolution << ',' << fmt17(r.err_rho)
            << ',' << fmt17(r.err_mom) << ',' << fmt17(r.err_E) << ',' << fmt17(r.err_sum) << ','
            << (std::isnan(r.order) ? std::string("nan") : fmt17(r.order)) << '\n';
    }
}

std::filesystem::path output_directory(const RunConfig& cfg) {
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
    return cfg.output.dir;
}

} // namespace igrfv
