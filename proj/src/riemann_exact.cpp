#include "igrfv/riemann_exact.hpp"

#include "igrfv/errors.hpp"

#include <algorithm>
#include <cmath>

namespace igrfv {

namespace {

constexpr double kResidualTol = 1e-12;
constexpr int kMaxNewton = 100;

struct SideFunction {
    double f;
    double df;
};

// Toro's f_K(p) and its derivative for one side: shock branch when p > p_K,
// rarefaction branch otherwise.
SideFunction side_function(double p, const PrimitiveState& w, double gamma) {
    const double c = std::sqrt(gamma * w.p / w.rho);
    if (p > w.p) {
        const double a = 2.0 / ((gamma + 1.0) * w.rho);
        const double b = (gamma - 1.0) / (gamma + 1.0) * w.p;
        const double q = std::sqrt(a / (p + b));
        return {(p - w.p) * q, q * (1.0 - 0.5 * (p - w.p) / (b + p))};
    }
    const double ratio = p / w.p;
    const double ex = (gamma - 1.0) / (2.0 * gamma);
    return {2.0 * c / (gamma - 1.0) * (std::pow(ratio, ex) - 1.0),
            1.0 / (w.rho * c) * std::pow(ratio, -(gamma + 1.0) / (2.0 * gamma))};
}

} // namespace

double riemann_pressure_function(double p, const PrimitiveState& wl, const PrimitiveState& wr,
                                 const EosParams& eos) {
    return side_function(p, wl, eos.gamma).f + side_function(p, wr, eos.gamma).f +
           (wr.vel[0] - wl.vel[0]);
}

StarRegion solve_star_region(const PrimitiveState& wl, const PrimitiveState& wr,
                             const EosParams& eos) {
    const double g = eos.gamma;
    const double cl = std::sqrt(g * wl.p / wl.rho);
    const double cr = std::sqrt(g * wr.p / wr.rho);
    const double du = wr.vel[0] - wl.vel[0];
    if (2.0 / (g - 1.0) * (cl + cr) <= du) {
        throw VacuumGenerated("exact_riemann: initial data generate vacuum");
    }

    // Two-rarefaction estimate.
    const double ex = (g - 1.0) / (2.0 * g);
    const double num = cl + cr - 0.5 * (g - 1.0) * du;
    const double den = cl / std::pow(wl.p, ex) + cr / std::pow(wr.p, ex);
    double p = std::pow(num / den, 1.0 / ex);
    const double p_floor = 1e-14 * std::min(wl.p, wr.p);
    p = std::max(p, p_floor);

    StarRegion star;
    for (int it = 1; it <= kMaxNewton; ++it) {
        const SideFunction fl = side_function(p, wl, g);
        const SideFunction fr = side_function(p, wr, g);
        const double f = fl.f + fr.f + du;
        if (std::abs(f) <= kResidualTol) {
            star.p = p;
            star.u = 0.5 * (wl.vel[0] + wr.vel[0]) + 0.5 * (fr.f - fl.f);
            star.iterations = it - 1;
            return star;
        }
        double next = p - f / (fl.df + fr.df);
        if (next <= 0.0) next = 0.5 * p;  // stay in the physical branch
        p = std::max(next, p_floor);
    }
    throw NoConvergence("exact_riemann: Newton iteration did not converge");
}

ExactRiemann::ExactRiemann(const PrimitiveState& wl, const PrimitiveState& wr,
                           const EosParams& eos)
    : wl_(wl), wr_(wr), eos_(eos) {
    const bool same = wl.rho == wr.rho && wl.p == wr.p && wl.vel[0] == wr.vel[0];
    if (same) {
        star_.p = wl.p;
        star_.u = wl.vel[0];
    } else {
        star_ = solve_star_region(wl, wr, eos);
    }
}

PrimitiveState ExactRiemann::sample(double xi) const {
    const double g = eos_.gamma;
    const double ps = star_.p;
    const double us = star_.u;
    const double gp = (g + 1.0) / (2.0 * g);
    const double gm = (g - 1.0) / (2.0 * g);
    const double gr = (g - 1.0) / (g + 1.0);

    const bool left_of_contact = xi <= us;
    const PrimitiveState& w = left_of_contact ? wl_ : wr_;
    const double sgn = left_of_contact ? 1.0 : -1.0;  // mirror the right side onto the left
    const double u = sgn * w.vel[0];
    const double x = sgn * xi;
    const double u_star = sgn * us;
    const double c = std::sqrt(g * w.p / w.rho);

    PrimitiveState out;
    out.vel[1] = w.vel[1];
    auto finish = [&](double rho, double vel, double p) {
        out.rho = rho;
        out.vel[0] = sgn * vel;
        out.p = p;
        return out;
    };

    if (ps > w.p) {
        // Shock.
        const double shock = u - c * std::sqrt(gp * ps / w.p + gm);
        if (x <= shock) return finish(w.rho, u, w.p);
        const double ratio = ps / w.p;
        return finish(w.rho * (ratio + gr) / (gr * ratio + 1.0), u_star, ps);
    }
    // Rarefaction.
    const double head = u - c;
    if (x <= head) return finish(w.rho, u, w.p);
    const double c_star = c * std::pow(ps / w.p, gm);
    const double tail = u_star - c_star;
    if (x > tail) return finish(w.rho * std::pow(ps / w.p, 1.0 / g), u_star, ps);
    const double base = 2.0 / (g + 1.0) + gr / c * (u - x);
    return finish(w.rho * std::pow(base, 2.0 / (g - 1.0)),
                  2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * u + x),
                  w.p * std::pow(base, 2.0 * g / (g - 1.0)));
}

PrimitiveState exact_riemann(const PrimitiveState& wl, const PrimitiveState& wr,
                             const EosParams& eos, double xi) {
    return ExactRiemann(wl, wr, eos).sample(xi);
}

} // namespace igrfv
