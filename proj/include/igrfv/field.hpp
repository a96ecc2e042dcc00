#pragma once

#include "igrfv/grid.hpp"
#include "igrfv/state.hpp"

#include <array>
#include <span>
#include <vector>

namespace igrfv {

// Conserved-variable slots. Slot kMomY is unallocated on 1D grids.
enum Var : int { kRho = 0, kMomX = 1, kMomY = 2, kEnergy = 3 };
inline constexpr int kMaxVars = 4;

// Active variable slots for a given dimension, in storage order.
std::span<const int> active_vars(int dim);

// Cell-averaged conserved variables, stored structure-of-arrays over the
// padded (ghost-inclusive) grid.
class ConservedField {
public:
    ConservedField() = default;
    ConservedField(const Grid& grid, double gamma);

    const Grid& grid() const { return grid_; }
    double gamma() const { return gamma_; }
    EosParams eos() const { return {gamma_}; }
    int dim() const { return grid_.dim; }

    std::span<double> var(int v) { return vars_[v]; }
    std::span<const double> var(int v) const { return vars_[v]; }
    double* data(int v) { return vars_[v].data(); }
    const double* data(int v) const { return vars_[v].data(); }

    double& at(int v, int i, int j = 0) { return vars_[v][grid_.index(i, j)]; }
    double at(int v, int i, int j = 0) const { return vars_[v][grid_.index(i, j)]; }

    ConservedState state(int i, int j = 0) const;
    void set_state(int i, int j, const ConservedState& u);
    PrimitiveState primitive(int i, int j = 0) const;

    // y <- a*x + b*y over every slot, ghosts included.
    void axpby(double a, const ConservedField& x, double b);
    void fill(const ConservedState& u);

private:
    Grid grid_;
    double gamma_ = 1.4;
    std::array<std::vector<double>, kMaxVars> vars_;
};

// Throws NonPhysicalState naming the first interior cell (row-major) with
// rho <= 0, p <= 0 or a non-finite value.
void check_physical(const ConservedField& field);

struct Invariants {
    double mass = 0.0;
    std::array<double, 2> momentum{0.0, 0.0};
    double energy = 0.0;
};

// Interior sums of cell averages times cell volume, in a fixed order.
Invariants total_invariants(const ConservedField& field);

} // namespace igrfv
