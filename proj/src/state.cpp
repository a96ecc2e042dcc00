#include "igrfv/state.hpp"

#include "igrfv/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace igrfv {

std::string NonPhysicalState::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << what() << " at cell (" << i_ << ", " << j_ << "): rho=" << rho_ << " p=" << p_;
    if (step_ >= 0) os << ", step " << step_;
    if (stage_ >= 0) os << ", RK stage " << stage_;
    os << ", t=" << time_;
    return os.str();
}

PrimitiveState cons_to_prim(const ConservedState& u, const EosParams& eos) {
    PrimitiveState w;
    w.rho = u.rho;
    if (!(u.rho > 0.0) || !std::isfinite(u.rho)) {
        throw NonPhysicalState("non-positive density", -1, -1, u.rho, 0.0);
    }
    w.vel = {u.mom[0] / u.rho, u.mom[1] / u.rho};
    w.p = (eos.gamma - 1.0) * internal_energy_density(u);
    if (!(w.p > 0.0) || !std::isfinite(w.p)) {
        throw NonPhysicalState("non-positive pressure", -1, -1, u.rho, w.p);
    }
    return w;
}

ConservedState prim_to_cons(const PrimitiveState& w, const EosParams& eos) {
    if (!(w.rho > 0.0) || !(w.p > 0.0)) {
        throw std::invalid_argument("prim_to_cons: rho and p must be positive");
    }
    ConservedState u;
    u.rho = w.rho;
    u.mom = {w.rho * w.vel[0], w.rho * w.vel[1]};
    u.E = w.p / (eos.gamma - 1.0) + 0.5 * w.rho * (w.vel[0] * w.vel[0] + w.vel[1] * w.vel[1]);
    return u;
}

double sound_speed(const PrimitiveState& w, const EosParams& eos) {
    return std::sqrt(eos.gamma * w.p / w.rho);
}

} // namespace igrfv
