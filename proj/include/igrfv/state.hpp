#pragma once

#include <array>

namespace igrfv {

struct EosParams {
    double gamma = 1.4;
};

// (rho, velocity, p). In 1D the second velocity component is ignored and kept 0.
struct PrimitiveState {
    double rho = 1.0;
    std::array<double, 2> vel{0.0, 0.0};
    double p = 1.0;
};

// (rho, rho*velocity, total energy density).
struct ConservedState {
    double rho = 1.0;
    std::array<double, 2> mom{0.0, 0.0};
    double E = 1.0;
};

// Throws NonPhysicalState if rho <= 0, p <= 0 or anything is non-finite.
PrimitiveState cons_to_prim(const ConservedState& u, const EosParams& eos);

// Requires rho > 0 and p > 0; throws std::invalid_argument otherwise.
ConservedState prim_to_cons(const PrimitiveState& w, const EosParams& eos);

double sound_speed(const PrimitiveState& w, const EosParams& eos);

inline double internal_energy_density(const ConservedState& u) {
    return u.E - 0.5 * (u.mom[0] * u.mom[0] + u.mom[1] * u.mom[1]) / u.rho;
}

} // namespace igrfv
