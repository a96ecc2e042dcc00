#include "igrfv/flux.hpp"

#include <stdexcept>
#include <string>

namespace igrfv {

std::string_view to_string(FluxKind kind) {
    return kind == FluxKind::rusanov ? "rusanov" : "hllc";
}

FluxKind flux_from_string(std::string_view name) {
    if (name == "rusanov" || name == "lf") return FluxKind::rusanov;
    if (name == "hllc") return FluxKind::hllc;
    throw std::invalid_argument("unknown flux: " + std::string(name));
}

namespace {

detail::FaceState rotate(const ConservedState& u, int axis) {
    return {u.rho, u.mom[axis], u.mom[1 - axis], u.E};
}

FluxVector unrotate(const detail::FaceFlux& f, int axis) {
    FluxVector out{};
    out[0] = f.rho;
    out[1 + axis] = f.mn;
    out[2 - axis] = f.mt;
    out[3] = f.E;
    return out;
}

} // namespace

FluxVector physical_flux(const ConservedState& u, int axis, double sigma, const EosParams& eos) {
    const PrimitiveState w = cons_to_prim(u, eos);
    const double un = w.vel[axis];
    const double peff = w.p + sigma;
    FluxVector f{};
    f[0] = u.rho * un;
    f[1] = u.mom[0] * un;
    f[2] = u.mom[1] * un;
    f[1 + axis] += peff;
    f[3] = (u.E + peff) * un;
    return f;
}

double max_wave_speed(const PrimitiveState& wl, const PrimitiveState& wr, int axis,
                      const EosParams& eos) {
    return std::max(std::abs(wl.vel[axis]) + sound_speed(wl, eos),
                    std::abs(wr.vel[axis]) + sound_speed(wr, eos));
}

FluxVector rusanov_flux(const ConservedState& ul, const ConservedState& ur, double sigma_face,
                        int axis, const EosParams& eos) {
    const FluxVector fl = physical_flux(ul, axis, sigma_face, eos);
    const FluxVector fr = physical_flux(ur, axis, sigma_face, eos);
    const double lam = max_wave_speed(cons_to_prim(ul, eos), cons_to_prim(ur, eos), axis, eos);
    const FluxVector a{ul.rho, ul.mom[0], ul.mom[1], ul.E};
    const FluxVector b{ur.rho, ur.mom[0], ur.mom[1], ur.E};
    FluxVector out{};
    for (int k = 0; k < 4; ++k) out[k] = 0.5 * (fl[k] + fr[k]) - 0.5 * lam * (b[k] - a[k]);
    return out;
}

FluxVector hllc_flux(const ConservedState& ul, const ConservedState& ur, int axis,
                     const EosParams& eos) {
    // Validates both states (throws NonPhysicalState).
    cons_to_prim(ul, eos);
    cons_to_prim(ur, eos);
    return unrotate(detail::hllc(rotate(ul, axis), rotate(ur, axis), eos.gamma), axis);
}

} // namespace igrfv
