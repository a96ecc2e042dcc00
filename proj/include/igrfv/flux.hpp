#pragma once

#include "igrfv/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>

namespace igrfv {

enum class FluxKind { rusanov, hllc };

std::string_view to_string(FluxKind kind);
FluxKind flux_from_string(std::string_view name);

// Flux densities indexed like the conserved slots (rho, mom x, mom y, E).
using FluxVector = std::array<double, 4>;

// Euler flux along `axis` with p replaced by p + sigma.
FluxVector physical_flux(const ConservedState& u, int axis, double sigma, const EosParams& eos);

// max(|u_L| + c_L, |u_R| + c_R) with normal velocities along `axis`.
double max_wave_speed(const PrimitiveState& wl, const PrimitiveState& wr, int axis,
                      const EosParams& eos);

// Local Lax-Friedrichs flux. sigma_face augments the pressure in both
// physical fluxes; the dissipation speed uses the physical sound speed only.
FluxVector rusanov_flux(const ConservedState& ul, const ConservedState& ur, double sigma_face,
                        int axis, const EosParams& eos);

// HLLC flux with pressure-based (PVRS) wave-speed estimates.
FluxVector hllc_flux(const ConservedState& ul, const ConservedState& ur, int axis,
                     const EosParams& eos);

namespace detail {

// State rotated into the face frame: mn is the face-normal momentum and mt
// the tangential one (zero in 1D).
struct FaceState {
    double rho;
    double mn;
    double mt;
    double E;
};

struct FaceFlux {
    double rho;
    double mn;
    double mt;
    double E;
};

struct FacePrimitive {
    double un;
    double ut;
    double p;
    double c;
};

inline FacePrimitive face_primitive(const FaceState& s, double gamma) {
    const double inv = 1.0 / s.rho;
    const double un = s.mn * inv;
    const double ut = s.mt * inv;
    const double p = (gamma - 1.0) * (s.E - 0.5 * s.rho * (un * un + ut * ut));
    return {un, ut, p, std::sqrt(gamma * p * inv)};
}

inline FaceFlux euler_flux(const FaceState& s, const FacePrimitive& w, double sigma) {
    const double peff = w.p + sigma;
    return {s.mn, s.mn * w.un + peff, s.mt * w.un, (s.E + peff) * w.un};
}

inline FaceFlux rusanov(const FaceState& l, const FacePrimitive& wl, const FaceState& r,
                        const FacePrimitive& wr, double sigma) {
    const FaceFlux fl = euler_flux(l, wl, sigma);
    const FaceFlux fr = euler_flux(r, wr, sigma);
    const double lam = std::max(std::abs(wl.un) + wl.c, std::abs(wr.un) + wr.c);
    return {0.5 * (fl.rho + fr.rho) - 0.5 * lam * (r.rho - l.rho),
            0.5 * (fl.mn + fr.mn) - 0.5 * lam * (r.mn - l.mn),
            0.5 * (fl.mt + fr.mt) - 0.5 * lam * (r.mt - l.mt),
            0.5 * (fl.E + fr.E) - 0.5 * lam * (r.E - l.E)};
}

inline FaceFlux rusanov(const FaceState& l, const FaceState& r, double sigma, double gamma) {
    return rusanov(l, face_primitive(l, gamma), r, face_primitive(r, gamma), sigma);
}

inline FaceFlux hllc(const FaceState& l, const FacePrimitive& wl, const FaceState& r,
                     const FacePrimitive& wr, double gamma) {

    const double rho_bar = 0.5 * (l.rho + r.rho);
    const double c_bar = 0.5 * (wl.c + wr.c);
    const double p_pvrs = 0.5 * (wl.p + wr.p) - 0.5 * (wr.un - wl.un) * rho_bar * c_bar;
    const double p_star = std::max(0.0, p_pvrs);
    const double g1 = (gamma + 1.0) / (2.0 * gamma);
    const double ql = p_star <= wl.p ? 1.0 : std::sqrt(1.0 + g1 * (p_star / wl.p - 1.0));
    const double qr = p_star <= wr.p ? 1.0 : std::sqrt(1.0 + g1 * (p_star / wr.p - 1.0));
    const double sl = wl.un - wl.c * ql;
    const double sr = wr.un + wr.c * qr;

    if (sl >= 0.0) return euler_flux(l, wl, 0.0);
    if (sr <= 0.0) return euler_flux(r, wr, 0.0);

    const double dl = l.rho * (sl - wl.un);
    const double dr = r.rho * (sr - wr.un);
    const double s_star = (wr.p - wl.p + l.mn * (sl - wl.un) - r.mn * (sr - wr.un)) / (dl - dr);

    // Star state on the side K, then F*_K = F_K + S_K (U*_K - U_K).
    auto star_flux = [&](const FaceState& s, const FacePrimitive& w, double sk) {
        const FaceFlux f = euler_flux(s, w, 0.0);
        const double factor = s.rho * (sk - w.un) / (sk - s_star);
        const double rho_s = factor;
        const double mn_s = factor * s_star;
        const double mt_s = factor * w.ut;
        const double E_s = factor * (s.E / s.rho +
                                     (s_star - w.un) * (s_star + w.p / (s.rho * (sk - w.un))));
        return FaceFlux{f.rho + sk * (rho_s - s.rho), f.mn + sk * (mn_s - s.mn),
                        f.mt + sk * (mt_s - s.mt), f.E + sk * (E_s - s.E)};
    };
    return s_star >= 0.0 ? star_flux(l, wl, sl) : star_flux(r, wr, sr);
}

inline FaceFlux hllc(const FaceState& l, const FaceState& r, double gamma) {
    return hllc(l, face_primitive(l, gamma), r, face_primitive(r, gamma), gamma);
}

} // namespace detail

} // namespace igrfv
