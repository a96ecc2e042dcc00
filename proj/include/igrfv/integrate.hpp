#pragma once

#include "igrfv/boundary.hpp"
#include "igrfv/exec.hpp"
#include "igrfv/field.hpp"
#include "igrfv/flux.hpp"
#include "igrfv/igr.hpp"
#include "igrfv/lad.hpp"
#include "igrfv/reconstruct.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace igrfv {

enum class Scheme { igr, weno5, lad, plain };

std::string_view to_string(Scheme scheme);
Scheme scheme_from_string(std::string_view name);

struct SchemeConfig {
    Scheme scheme = Scheme::igr;
    FluxKind flux = FluxKind::rusanov;
    ReconstructionKind recon = ReconstructionKind::linear5;
    // alpha = alpha_factor * max(dx, dy)^2 unless `alpha` is set.
    double alpha_factor = 2.0;
    std::optional<double> alpha;
    IgrParams igr;
    LadParams lad;
    double cfl = 0.4;

    // Throws std::invalid_argument on inconsistent settings.
    void validate(int dim) const;
    double resolved_alpha(const Grid& grid) const;
};

// Defaults for a scheme: its reconstruction, tolerance and CFL per dimension.
SchemeConfig default_scheme_config(Scheme scheme, int dim);

// Largest stable step: cfl / sum_axes(max_cells(|u_axis| + c) / dx_axis).
double compute_dt(const ConservedField& field, double cfl);

// Semi-discrete operator L(U) with its workspaces. evaluate() rewrites the
// ghost cells of U, refreshes Sigma for IGR, and stores dU/dt for the
// interior in `rhs` (same layout as U; ghosts of rhs are left at zero).
class RhsEvaluator {
public:
    RhsEvaluator(const Grid& grid, const SchemeConfig& cfg, BoundarySpec bc,
                 Exec exec = Exec::parallel);

    void evaluate(ConservedField& u, double t, ConservedField& rhs);

    const SchemeConfig& config() const { return cfg_; }
    const BoundarySpec& boundary() const { return bc_; }
    const SigmaField& sigma() const { return sigma_; }
    SigmaField& sigma() { return sigma_; }
    double alpha() const { return alpha_; }
    Exec exec() const { return exec_; }

private:
    void face_fluxes(const ConservedField& u, int axis);
    void accumulate(const ConservedField& u, ConservedField& rhs) const;

    SchemeConfig cfg_;
    BoundarySpec bc_;
    Exec exec_;
    double alpha_;
    SigmaField sigma_;
    std::vector<double> sigma_padded_;
    std::array<FaceLayout, 2> layouts_;
    std::array<std::array<std::vector<double>, kMaxVars>, 2> fluxes_;
};

// Convenience wrapper: one fresh evaluator, cold Sigma start.
ConservedField semi_discrete_rhs(const ConservedField& u, const SchemeConfig& cfg,
                                 const BoundarySpec& bc, double t,
                                 Exec exec = Exec::parallel);

// Three-stage third-order SSP Runge-Kutta step. Stage times are t, t + dt,
// t + dt/2. Throws NonPhysicalState tagged with the stage index (0..2).
class SspRk3 {
public:
    explicit SspRk3(const Grid& grid);
    void step(ConservedField& u, RhsEvaluator& op, double t, double dt);

private:
    ConservedField u0_;
    ConservedField rhs_;
};

// Per-step scalars recorded by the solver.
struct StepRecord {
    long step = 0;
    double t = 0.0;
    double dt = 0.0;
    double min_rho = 0.0;
    double min_p = 0.0;
    double max_speed = 0.0;
    int sigma_sweeps = 0;
    double sigma_residual = 0.0;
    Invariants totals;
};

// Time-marching driver for one field.
class Solver {
public:
    Solver(ConservedField initial, const SchemeConfig& cfg, BoundarySpec bc,
           Exec exec = Exec::parallel);

    const ConservedField& field() const { return u_; }
    ConservedField& field() { return u_; }
    double time() const { return t_; }
    long steps() const { return step_; }
    const RhsEvaluator& op() const { return op_; }
    RhsEvaluator& op() { return op_; }

    // Advances by one CFL-limited step, clipped so time never passes `t_stop`.
    StepRecord step(double t_stop);

    // Advances to exactly t_final. `observer` sees each accepted step.
    void advance_to(double t_final, const std::function<void(const StepRecord&)>& observer = {});

    // Sigma consistent with the current state (solved on demand for IGR).
    const SigmaField& current_sigma();

private:
    StepRecord record(double dt) const;

    ConservedField u_;
    RhsEvaluator op_;
    SspRk3 rk_;
    SigmaField probe_;
    double t_ = 0.0;
    long step_ = 0;
};

} // namespace igrfv
