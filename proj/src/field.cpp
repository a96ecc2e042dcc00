#include "igrfv/field.hpp"

#include "igrfv/errors.hpp"
#include "igrfv/exec.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace igrfv {

namespace {

constexpr int kVars1d[] = {kRho, kMomX, kEnergy};
constexpr int kVars2d[] = {kRho, kMomX, kMomY, kEnergy};

} // namespace

int thread_count(Exec exec) {
    return exec == Exec::parallel ? omp_get_max_threads() : 1;
}

std::span<const int> active_vars(int dim) {
    if (dim == 2) return kVars2d;
    return kVars1d;
}

ConservedField::ConservedField(const Grid& grid, double gamma) : grid_(grid), gamma_(gamma) {
    for (int v : active_vars(grid.dim)) {
        vars_[v].assign(grid.padded_count(), 0.0);
    }
}

ConservedState ConservedField::state(int i, int j) const {
    const std::size_t k = grid_.index(i, j);
    ConservedState u;
    u.rho = vars_[kRho][k];
    u.mom[0] = vars_[kMomX][k];
    u.mom[1] = grid_.dim == 2 ? vars_[kMomY][k] : 0.0;
    u.E = vars_[kEnergy][k];
    return u;
}

void ConservedField::set_state(int i, int j, const ConservedState& u) {
    const std::size_t k = grid_.index(i, j);
    vars_[kRho][k] = u.rho;
    vars_[kMomX][k] = u.mom[0];
    if (grid_.dim == 2) vars_[kMomY][k] = u.mom[1];
    vars_[kEnergy][k] = u.E;
}

PrimitiveState ConservedField::primitive(int i, int j) const {
    return cons_to_prim(state(i, j), eos());
}

void ConservedField::axpby(double a, const ConservedField& x, double b) {
    for (int v : active_vars(grid_.dim)) {
        double* y = vars_[v].data();
        const double* xs = x.vars_[v].data();
        const std::size_t n = vars_[v].size();
        for (std::size_t k = 0; k < n; ++k) y[k] = a * xs[k] + b * y[k];
    }
}

void ConservedField::fill(const ConservedState& u) {
    for (int j = -(grid_.dim == 2 ? kGhost : 0); j < grid_.ny() + (grid_.dim == 2 ? kGhost : 0);
         ++j) {
        for (int i = -kGhost; i < grid_.nx() + kGhost; ++i) set_state(i, j, u);
    }
}

void check_physical(const ConservedField& field) {
    const Grid& g = field.grid();
    const double gm1 = field.gamma() - 1.0;
    // Cheap vectorizable screen first; locate the culprit only on failure.
    double worst = 1.0;
    for (int j = 0; j < g.ny(); ++j) {
        const std::size_t row = g.index(0, j);
        const double* rho = field.data(kRho) + row;
        const double* mx = field.data(kMomX) + row;
        const double* my = g.dim == 2 ? field.data(kMomY) + row : nullptr;
        const double* en = field.data(kEnergy) + row;
        for (int i = 0; i < g.nx(); ++i) {
            const double m2 = mx[i] * mx[i] + (my ? my[i] * my[i] : 0.0);
            const double p = gm1 * (en[i] - 0.5 * m2 / rho[i]);
            const double bad = (rho[i] > 0.0 && p > 0.0 && std::isfinite(p)) ? 1.0 : -1.0;
            worst = std::min(worst, bad);
        }
    }
    if (worst > 0.0) return;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const ConservedState u = field.state(i, j);
            const double p = gm1 * internal_energy_density(u);
            if (!(u.rho > 0.0) || !std::isfinite(u.rho)) {
                throw NonPhysicalState("non-positive density", i, j, u.rho, p);
            }
            if (!(p > 0.0) || !std::isfinite(p)) {
                throw NonPhysicalState("non-positive pressure", i, j, u.rho, p);
            }
        }
    }
}

Invariants total_invariants(const ConservedField& field) {
    const Grid& g = field.grid();
    Invariants sum;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const ConservedState u = field.state(i, j);
            sum.mass += u.rho;
            sum.momentum[0] += u.mom[0];
            sum.momentum[1] += u.mom[1];
            sum.energy += u.E;
        }
    }
    const double vol = g.cell_volume();
    sum.mass *= vol;
    sum.momentum[0] *= vol;
    sum.momentum[1] *= vol;
    sum.energy *= vol;
    return sum;
}

} // namespace igrfv
