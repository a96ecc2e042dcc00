#pragma once

#include "igrfv/state.hpp"

namespace igrfv {

// Star-region solution of the ideal-gas Riemann problem along x.
struct StarRegion {
    double p = 0.0;
    double u = 0.0;
    int iterations = 0;
};

// Newton iteration on the two-wave pressure function, started from the
// two-rarefaction estimate; stops once |f(p)| <= 1e-12.
// Throws VacuumGenerated if the data would open a vacuum and NoConvergence
// after 100 iterations.
StarRegion solve_star_region(const PrimitiveState& wl, const PrimitiveState& wr,
                             const EosParams& eos);

// Pressure function f(p) = f_L(p) + f_R(p) + (u_R - u_L), exposed for tests.
double riemann_pressure_function(double p, const PrimitiveState& wl, const PrimitiveState& wr,
                                 const EosParams& eos);

// Self-similar solution sampled at xi = x / t. The tangential velocity
// (vel[1]) is carried passively across the contact.
PrimitiveState exact_riemann(const PrimitiveState& wl, const PrimitiveState& wr,
                             const EosParams& eos, double xi);

// Sampler that caches the star region for repeated evaluation.
class ExactRiemann {
public:
    ExactRiemann(const PrimitiveState& wl, const PrimitiveState& wr, const EosParams& eos);

    PrimitiveState sample(double xi) const;
    const StarRegion& star() const { return star_; }

private:
    PrimitiveState wl_;
    PrimitiveState wr_;
    EosParams eos_;
    StarRegion star_;
};

} // namespace igrfv
