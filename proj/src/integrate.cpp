#include "igrfv/integrate.hpp"

#include "igrfv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace igrfv {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
    case Scheme::igr: return "igr";
    case Scheme::weno5: return "weno5";
    case Scheme::lad: return "lad";
    case Scheme::plain: return "plain";
    }
    return "?";
}

Scheme scheme_from_string(std::string_view name) {
    if (name == "igr") return Scheme::igr;
    if (name == "weno5" || name == "weno5_component") return Scheme::weno5;
    if (name == "lad") return Scheme::lad;
    if (name == "plain") return Scheme::plain;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

void SchemeConfig::validate(int dim) const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
    if (scheme == Scheme::igr && recon == ReconstructionKind::weno5)
        throw std::invalid_argument("scheme igr cannot use weno5_component reconstruction");
    if (scheme == Scheme::weno5 && recon != ReconstructionKind::weno5)
        throw std::invalid_argument("scheme weno5 requires weno5_component reconstruction");
    if ((scheme == Scheme::plain || scheme == Scheme::lad) && recon == ReconstructionKind::weno5)
        throw std::invalid_argument("schemes plain and lad use linear reconstruction");
    if (scheme == Scheme::lad && dim != 1) throw std::invalid_argument("lad is 1D only");
    if (!(alpha_factor >= 0.0)) throw std::invalid_argument("alpha_factor must be >= 0");
    if (alpha && !(*alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
    if (igr.max_sweeps < 1 || igr.cold_sweeps < 1)
        throw std::invalid_argument("sweep budgets must be positive");
    if (igr.solver == SigmaSolver::direct && dim != 1)
        throw std::invalid_argument("the direct sigma solver is 1D only");
    if (!(igr.rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
    if (!(lad.coeff >= 0.0) || lad.smoothing_passes < 0)
        throw std::invalid_argument("invalid lad parameters");
}

double SchemeConfig::resolved_alpha(const Grid& grid) const {
    if (alpha) return *alpha;
    const double h = grid.max_spacing();
    return alpha_factor * h * h;
}

SchemeConfig default_scheme_config(Scheme scheme, int dim) {
    SchemeConfig cfg;
    cfg.scheme = scheme;
    cfg.recon = scheme == Scheme::weno5 ? ReconstructionKind::weno5 : ReconstructionKind::linear5;
    cfg.cfl = dim == 2 ? 0.3 : 0.4;
    cfg.igr.rel_tol = dim == 2 ? 1e-4 : 1e-6;
    return cfg;
}

double compute_dt(const ConservedField& field, double cfl) {
    check_physical(field);
    const Grid& g = field.grid();
    const double gamma = field.gamma();
    const double* rho = field.data(kRho);
    const double* mx = field.data(kMomX);
    const double* my = g.dim == 2 ? field.data(kMomY) : nullptr;
    const double* en = field.data(kEnergy);
    double lx = 0.0;
    double ly = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        const std::size_t c0 = g.index(0, j);
        const int nx = g.nx();
        if (my) {
#pragma omp simd reduction(max : lx, ly)
            for (int i = 0; i < nx; ++i) {
                const std::size_t c = c0 + static_cast<std::size_t>(i);
                const double inv = 1.0 / rho[c];
                const double u = mx[c] * inv;
                const double v = my[c] * inv;
                const double p = (gamma - 1.0) * (en[c] - 0.5 * rho[c] * (u * u + v * v));
                const double cs = std::sqrt(gamma * p * inv);
                lx = std::max(lx, std::abs(u) + cs);
                ly = std::max(ly, std::abs(v) + cs);
            }
        } else {
#pragma omp simd reduction(max : lx)
            for (int i = 0; i < nx; ++i) {
                const std::size_t c = c0 + static_cast<std::size_t>(i);
                const double inv = 1.0 / rho[c];
                const double u = mx[c] * inv;
                const double p = (gamma - 1.0) * (en[c] - 0.5 * rho[c] * u * u);
                lx = std::max(lx, std::abs(u) + std::sqrt(gamma * p * inv));
            }
        }
    }
    double rate = lx / g.spacing[0];
    if (g.dim == 2) rate += ly / g.spacing[1];
    if (!(rate > 0.0)) throw std::invalid_argument("compute_dt: zero wave speed");
    return cfl / rate;
}

SspRk3::SspRk3(const Grid& grid) : u0_(grid, 1.4), rhs_(grid, 1.4) {}

void SspRk3::step(ConservedField& u, RhsEvaluator& op, double t, double dt) {
    u0_.axpby(1.0, u, 0.0);
    const double times[3] = {t, t + dt, t + 0.5 * dt};
    for (int stage = 0; stage < 3; ++stage) {
        try {
            op.evaluate(u, times[stage], rhs_);
            u.axpby(dt, rhs_, 1.0);
            if (stage == 1) u.axpby(0.75, u0_, 0.25);
            if (stage == 2) u.axpby(1.0 / 3.0, u0_, 2.0 / 3.0);
            check_physical(u);
        } catch (NonPhysicalState& e) {
            e.set_context(times[stage], stage, e.step());
            throw;
        }
    }
}

Solver::Solver(ConservedField initial, const SchemeConfig& cfg, BoundarySpec bc, Exec exec)
    : u_(std::move(initial)), op_(u_.grid(), cfg, std::move(bc), exec), rk_(u_.grid()) {
    check_physical(u_);
}

StepRecord Solver::step(double t_stop) {
    double dt = compute_dt(u_, op_.config().cfl);
    bool last = false;
    if (t_ + dt >= t_stop) {
        dt = t_stop - t_;
        last = true;
    }
    try {
        rk_.step(u_, op_, t_, dt);
    } catch (NonPhysicalState& e) {
        e.set_context(e.time(), e.stage(), step_ + 1);
        throw;
    }
    t_ = last ? t_stop : t_ + dt;
    ++step_;
    return record(dt);
}

void Solver::advance_to(double t_final, const std::function<void(const StepRecord&)>& observer) {
    while (t_ < t_final) {
        const StepRecord r = step(t_final);
        if (observer) observer(r);
    }
}

const SigmaField& Solver::current_sigma() {
    if (op_.config().scheme != Scheme::igr) return op_.sigma();
    probe_ = op_.sigma();
    apply_boundary(u_, op_.boundary(), t_);
    IgrParams params = op_.config().igr;
    params.alpha = op_.alpha();
    solve_sigma(u_, params, probe_, op_.exec());
    return probe_;
}

StepRecord Solver::record(double dt) const {
    StepRecord r;
    r.step = step_;
    r.t = t_;
    r.dt = dt;
    const Grid& g = u_.grid();
    const double gm1 = u_.gamma() - 1.0;
    const double* rho = u_.data(kRho);
    const double* mx = u_.data(kMomX);
    const double* my = g.dim == 2 ? u_.data(kMomY) : nullptr;
    const double* en = u_.data(kEnergy);
    double min_rho = std::numeric_limits<double>::infinity();
    double min_p = std::numeric_limits<double>::infinity();
    double max_s2 = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        const std::size_t c0 = g.index(0, j);
        const int nx = g.nx();
#pragma omp simd reduction(min : min_rho, min_p) reduction(max : max_s2)
        for (int i = 0; i < nx; ++i) {
            const std::size_t c = c0 + static_cast<std::size_t>(i);
            const double m2 = mx[c] * mx[c] + (my ? my[c] * my[c] : 0.0);
            const double p = gm1 * (en[c] - 0.5 * m2 / rho[c]);
            min_rho = std::min(min_rho, rho[c]);
            min_p = std::min(min_p, p);
            max_s2 = std::max(max_s2, m2 / (rho[c] * rho[c]));
        }
    }
    r.min_rho = min_rho;
    r.min_p = min_p;
    r.max_speed = std::sqrt(max_s2);
    r.sigma_sweeps = op_.sigma().last_sweeps;
    r.sigma_residual = op_.sigma().last_residual;
    r.totals = total_invariants(u_);
    return r;
}

} // namespace igrfv
