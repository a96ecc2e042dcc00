#include "igrfv/cases.hpp"

#include "igrfv/errors.hpp"
#include "igrfv/riemann_exact.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace igrfv {

namespace {

constexpr double kPi = std::numbers::pi;

PrimitiveState lerp(const PrimitiveState& a, const PrimitiveState& b, double w) {
    PrimitiveState out;
    out.rho = a.rho + (b.rho - a.rho) * w;
    out.vel[0] = a.vel[0] + (b.vel[0] - a.vel[0]) * w;
    out.vel[1] = a.vel[1] + (b.vel[1] - a.vel[1]) * w;
    out.p = a.p + (b.p - a.p) * w;
    return out;
}

PrimitiveState prim(double rho, double u, double v, double p) {
    PrimitiveState w;
    w.rho = rho;
    w.vel = {u, v};
    w.p = p;
    return w;
}

double param(const CaseOverrides& o, const std::string& key, double fallback) {
    const auto it = o.params.find(key);
    return it == o.params.end() ? fallback : it->second;
}

struct CaseInfo {
    const char* name;
    int dim;
    std::vector<std::string> params;
};

const std::vector<CaseInfo>& registry() {
    static const std::vector<CaseInfo> cases = {
        {"convergence_sine", 1, {"amplitude"}},
        {"acoustic_sine", 1, {"beta", "k"}},
        {"shu_osher", 1, {"x_shock"}},
        {"sod", 1, {"x0"}},
        {"leblanc", 1, {}},
        {"riemann2d", 2, {"amplitude", "kappa"}},
        {"double_mach", 2, {}},
        {"isentropic_vortex", 2, {"periods", "strength"}},
    };
    return cases;
}

const CaseInfo& lookup(std::string_view name) {
    for (const auto& c : registry()) {
        if (name == c.name) return c;
    }
    throw UnknownCase("unknown case '" + std::string(name) + "'");
}

// Gauss-Legendre nodes and weights on [-1/2, 1/2].
void gauss_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    switch (n) {
    case 1:
        nodes = {0.0};
        weights = {1.0};
        return;
    case 2: {
        const double a = 0.5 / std::sqrt(3.0);
        nodes = {-a, a};
        weights = {0.5, 0.5};
        return;
    }
    case 3: {
        const double a = 0.5 * std::sqrt(0.6);
        nodes = {-a, 0.0, a};
        weights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
        return;
    }
    case 4: {
        const double r = std::sqrt(6.0 / 5.0);
        const double a = 0.5 * std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * r);
        const double b = 0.5 * std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * r);
        const double wa = (18.0 + std::sqrt(30.0)) / 72.0;
        const double wb = (18.0 - std::sqrt(30.0)) / 72.0;
        nodes = {-b, -a, a, b};
        weights = {wb, wa, wa, wb};
        return;
    }
    case 5: {
        const double a = 0.5 / 3.0 * std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0));
        const double b = 0.5 / 3.0 * std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0));
        const double w0 = 128.0 / 450.0;
        const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 1800.0;
        const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 1800.0;
        nodes = {-b, -a, 0.0, a, b};
        weights = {wb, wa, w0, wa, wb};
        return;
    }
    default:
        throw std::invalid_argument("quadrature must be between 1 and 5 points");
    }
}

void fill_interior(ConservedField& field, const InitialCondition& ic, int quadrature) {
    const Grid& g = field.grid();
    const EosParams eos = field.eos();
    std::vector<double> nodes;
    std::vector<double> weights;
    gauss_rule(quadrature, nodes, weights);
    const int qy = g.dim == 2 ? quadrature : 1;
    const int ny = g.ny();
#pragma omp parallel for schedule(static) if (ny > 8)
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const double xc = g.center(0, i);
            const double yc = g.dim == 2 ? g.center(1, j) : 0.0;
            if (quadrature == 1) {
                field.set_state(i, j, prim_to_cons(ic(xc, yc), eos));
                continue;
            }
            ConservedState sum{0.0, {0.0, 0.0}, 0.0};
            for (int b = 0; b < qy; ++b) {
                const double y = g.dim == 2 ? yc + nodes[b] * g.spacing[1] : 0.0;
                const double wy = g.dim == 2 ? weights[b] : 1.0;
                for (int a = 0; a < quadrature; ++a) {
                    const double x = xc + nodes[a] * g.spacing[0];
                    const ConservedState u = prim_to_cons(ic(x, y), eos);
                    const double w = weights[a] * wy;
                    sum.rho += w * u.rho;
                    sum.mom[0] += w * u.mom[0];
                    sum.mom[1] += w * u.mom[1];
                    sum.E += w * u.E;
                }
            }
            field.set_state(i, j, sum);
        }
    }
}

ReferenceSolution riemann_reference(const PrimitiveState& wl, const PrimitiveState& wr,
                                    double gamma, double x0) {
    auto solver = std::make_shared<ExactRiemann>(wl, wr, EosParams{gamma});
    return [solver, wl, wr, x0](double x, double, double t) {
        if (t <= 0.0) return x < x0 ? wl : wr;
        return solver->sample((x - x0) / t);
    };
}

CaseSpec make_spec(std::string_view name, int m, const CaseOverrides& o, double eps) {
    CaseSpec s;
    s.name = std::string(name);
    s.smoothing_eps = eps;

    if (name == "convergence_sine") {
        const double amp = param(o, "amplitude", 1.5);
        s.t_final = 0.15;
        s.bc = BoundarySpec::uniform(1, BoundaryKind::periodic);
        // e = 4 with gamma = 1.4 gives p = 1.6.
        s.ic = [amp](double x, double) { return prim(1.0, amp * std::sin(2.0 * kPi * x), 0.0, 1.6); };
    } else if (name == "acoustic_sine") {
        const double beta = param(o, "beta", 0.01);
        const double k = param(o, "k", 20.0);
        s.t_final = 0.4;
        s.bc = BoundarySpec::uniform(1, BoundaryKind::periodic);
        s.ic = [beta, k](double x, double) {
            return prim(1.0, beta * std::sin(2.0 * kPi * k * x), 0.0, 1.6);
        };
    } else if (name == "shu_osher") {
        const double xs = param(o, "x_shock", 0.1);
        s.t_final = 0.18;
        s.bc = BoundarySpec::uniform(1, BoundaryKind::zero_gradient);
        const PrimitiveState post = prim(27.0 / 7.0, 4.0 * std::sqrt(35.0) / 9.0, 0.0, 31.0 / 3.0);
        auto profile = tanh_smooth(
            {xs},
            {[post](double) { return post; },
             [](double x) { return prim(1.0 + 0.2 * std::sin(16.0 * kPi * x), 0.0, 0.0, 1.0); }},
            eps);
        s.ic = [profile](double x, double) { return profile(x); };
    } else if (name == "sod") {
        const double x0 = param(o, "x0", 0.5);
        s.t_final = 0.2;
        s.bc = BoundarySpec::uniform(1, BoundaryKind::zero_gradient);
        const PrimitiveState wl = prim(1.0, 0.0, 0.0, 1.0);
        const PrimitiveState wr = prim(0.125, 0.0, 0.0, 0.1);
        auto profile = tanh_smooth({x0}, {[wl](double) { return wl; }, [wr](double) { return wr; }}, eps);
        s.ic = [profile](double x, double) { return profile(x); };
        s.reference = riemann_reference(wl, wr, s.gamma, x0);
    } else if (name == "leblanc") {
        s.gamma = 5.0 / 3.0;
        s.hi = {9.0, 0.0};
        s.t_final = 6.0;
        const PrimitiveState wl = prim(1.0, 0.0, 0.0, 1.0 / 15.0);
        const PrimitiveState wr = prim(1e-3, 0.0, 0.0, 2.0 / 3.0 * 1e-9);
        // The left state fills the leftmost cell; ghosts follow the exact
        // solution of the problem centered on the left boundary.
        const double x0 = 9.0 / m;
        auto profile = tanh_smooth({x0}, {[wl](double) { return wl; }, [wr](double) { return wr; }}, eps);
        s.ic = [profile](double x, double) { return profile(x); };
        s.reference = riemann_reference(wl, wr, s.gamma, 0.0);
        s.bc = BoundarySpec::uniform(1, BoundaryKind::zero_gradient);
        const ReferenceSolution ref = s.reference;
        s.bc.sides[0][0] = BoundarySide::dirichlet([ref](double x, double y, double t) { return ref(x, y, t); });
    } else if (name == "riemann2d") {
        const double amp = param(o, "amplitude", 0.05);
        const double kappa = param(o, "kappa", 25.0);
        s.dim = 2;
        s.hi = {1.0, 1.0};
        s.t_final = 0.8;
        s.bc = BoundarySpec::uniform(2, BoundaryKind::zero_gradient);
        const PrimitiveState ll = prim(0.138, 1.206, 1.206, 0.029);
        const PrimitiveState lr = prim(0.532, 0.0, 1.206, 0.3);
        const PrimitiveState ul = prim(0.532, 1.206, 0.0, 0.3);
        const PrimitiveState ur = prim(1.5, 0.0, 0.0, 1.5);
        s.ic = [=](double x, double y) {
            const double hx = tanh_step(x - 0.75, eps);
            const double hy = tanh_step(y - 0.75, eps);
            PrimitiveState w = lerp(lerp(ll, lr, hx), lerp(ul, ur, hx), hy);
            w.rho *= 1.0 + amp * std::sin(2.0 * kPi * kappa * x) * std::sin(2.0 * kPi * kappa * y);
            return w;
        };
    } else if (name == "double_mach") {
        s.dim = 2;
        s.hi = {4.0, 1.0};
        s.t_final = 0.2;
        const DoubleMachStates dm = double_mach_states(s.gamma);
        const double sn = std::sin(dm.angle_deg * kPi / 180.0);
        // Smoothed across the shock line along its normal.
        auto across = [dm, sn, eps](double x, double y, double t) {
            return lerp(dm.post, dm.pre, tanh_step((x - dm.shock_x(y, t)) * sn, eps));
        };
        s.ic = [across](double x, double y) { return across(x, y, 0.0); };
        const PrimitiveState post = dm.post;
        auto post_fn = [post](double, double, double) { return post; };
        s.bc.sides[0][0] = BoundarySide::dirichlet(post_fn);
        s.bc.sides[0][1] = BoundarySide::of(BoundaryKind::zero_gradient);
        BoundarySide bottom;
        bottom.segments.push_back({-1e300, BoundaryKind::dirichlet, post_fn});
        bottom.segments.push_back({dm.x_foot, BoundaryKind::reflective_wall, {}});
        s.bc.sides[1][0] = bottom;
        // The ghosts carry the same smoothed profile as the interior.
        s.bc.sides[1][1] = BoundarySide::dirichlet(
            [across](double x, double y, double t) { return across(x, y, t); });
    } else if (name == "isentropic_vortex") {
        VortexParams vp;
        vp.strength = param(o, "strength", vp.strength);
        const double periods = param(o, "periods", 4.0);
        s.dim = 2;
        s.lo = {-0.5 * vp.box, -0.5 * vp.box};
        s.hi = {0.5 * vp.box, 0.5 * vp.box};
        s.gamma = vp.gamma;
        s.t_final = periods * vp.box / vp.u_inf;
        s.bc = BoundarySpec::uniform(2, BoundaryKind::periodic);
        s.ic = [vp](double x, double y) { return vortex_exact(x, y, 0.0, vp); };
        s.reference = [vp](double x, double y, double t) { return vortex_exact(x, y, t, vp); };
    }
    if (o.t_final) s.t_final = *o.t_final;
    return s;
}

} // namespace

std::vector<std::string> case_names() {
    std::vector<std::string> names;
    for (const auto& c : registry()) names.emplace_back(c.name);
    return names;
}

int case_dimension(std::string_view name) { return lookup(name).dim; }

std::vector<std::string> case_parameters(std::string_view name) {
    std::vector<std::string> keys = lookup(name).params;
    keys.emplace_back("quadrature");
    return keys;
}

double default_smoothing(std::string_view name, int resolution) {
    lookup(name);
    if (name == "sod" || name == "shu_osher") return 4.0 / resolution;
    if (name == "leblanc") return 45.0 / resolution;
    if (name == "riemann2d") return 2.0 / resolution;
    if (name == "double_mach") return 2.0 * 4.0 / resolution;
    return 0.0;
}

BuiltCase build_case(std::string_view name, int resolution, const CaseOverrides& overrides) {
    const CaseInfo& info = lookup(name);
    if (resolution < 6) throw std::invalid_argument("resolution must be at least 6");
    for (const auto& [key, value] : overrides.params) {
        if (key == "quadrature") continue;
        if (std::find(info.params.begin(), info.params.end(), key) == info.params.end())
            throw std::invalid_argument("case " + std::string(name) + " has no parameter '" + key + "'");
    }
    const double eps = overrides.eps ? *overrides.eps : default_smoothing(name, resolution);
    if (!(eps >= 0.0)) throw std::invalid_argument("smoothing eps must be >= 0");

    CaseSpec spec = make_spec(name, resolution, overrides, eps);
    Grid grid;
    if (spec.dim == 1) {
        grid = Grid::line(spec.lo[0], spec.hi[0], resolution);
    } else {
        const double aspect = (spec.hi[1] - spec.lo[1]) / (spec.hi[0] - spec.lo[0]);
        const int my = static_cast<int>(std::lround(resolution * aspect));
        grid = Grid::rect(spec.lo[0], spec.hi[0], resolution, spec.lo[1], spec.hi[1], my);
    }
    const int quadrature = static_cast<int>(param(overrides, "quadrature", 1.0));
    ConservedField field(grid, spec.gamma);
    fill_interior(field, spec.ic, quadrature);
    check_physical(field);
    apply_boundary(field, spec.bc, 0.0);
    BoundarySpec bc = spec.bc;
    return {grid, std::move(field), std::move(bc), std::move(spec)};
}

double tanh_step(double s, double eps) {
    if (eps <= 0.0) return s >= 0.0 ? 1.0 : 0.0;
    return 0.5 * (1.0 + std::tanh(s / eps));
}

std::function<PrimitiveState(double)> tanh_smooth(std::vector<double> breakpoints,
                                                  std::vector<ProfilePiece> pieces, double eps) {
    if (pieces.size() != breakpoints.size() + 1)
        throw std::invalid_argument("tanh_smooth: need one more piece than breakpoints");
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
        throw std::invalid_argument("tanh_smooth: breakpoints must be ordered");
    if (eps < 0.0) throw std::invalid_argument("tanh_smooth: eps must be >= 0");
    return [bp = std::move(breakpoints), pc = std::move(pieces), eps](double x) {
        PrimitiveState w = pc[0](x);
        for (std::size_t k = 0; k < bp.size(); ++k) {
            const double h = tanh_step(x - bp[k], eps);
            if (h == 0.0) continue;
            const PrimitiveState a = pc[k](x);
            const PrimitiveState b = pc[k + 1](x);
            w.rho += (b.rho - a.rho) * h;
            w.vel[0] += (b.vel[0] - a.vel[0]) * h;
            w.vel[1] += (b.vel[1] - a.vel[1]) * h;
            w.p += (b.p - a.p) * h;
        }
        return w;
    };
}

PrimitiveState vortex_exact(double x, double y, double t, const VortexParams& vp) {
    const double half = 0.5 * vp.box;
    auto wrap = [&](double s) {
        s = std::fmod(s + half, vp.box);
        if (s < 0.0) s += vp.box;
        return s - half;
    };
    const double xr = wrap(x - vp.u_inf * t);
    const double yr = wrap(y - vp.v_inf * t);
    const double r2 = xr * xr + yr * yr;
    const double g = std::exp(0.5 * vp.beta * (1.0 - r2));
    const double swirl = vp.strength / (2.0 * kPi) * g;
    const double k = vp.rho_inf / vp.p_inf * vp.strength * vp.strength * (vp.gamma - 1.0) /
                     (8.0 * vp.gamma * kPi * kPi);
    const double base = 1.0 - k * g * g;
    PrimitiveState w;
    w.rho = vp.rho_inf * std::pow(base, 1.0 / (vp.gamma - 1.0));
    w.vel = {vp.u_inf + yr * swirl, vp.v_inf - xr * swirl};
    w.p = vp.p_inf * std::pow(base, vp.gamma / (vp.gamma - 1.0));
    return w;
}

double DoubleMachStates::shock_x(double y, double t) const {
    const double theta = angle_deg * std::numbers::pi / 180.0;
    // The shock line moves with normal speed W; along a fixed height the
    // crossing point moves at W / sin(theta).
    return x_foot + y / std::tan(theta) + shock_speed * t / std::sin(theta);
}

DoubleMachStates double_mach_states(double gamma, double mach, double angle_deg) {
    DoubleMachStates s;
    s.mach = mach;
    s.angle_deg = angle_deg;
    s.pre = prim(1.4, 0.0, 0.0, 1.0);
    const double c1 = std::sqrt(gamma * s.pre.p / s.pre.rho);
    const double m2 = mach * mach;
    const double rho2 = s.pre.rho * (gamma + 1.0) * m2 / ((gamma - 1.0) * m2 + 2.0);
    const double p2 = s.pre.p * (1.0 + 2.0 * gamma / (gamma + 1.0) * (m2 - 1.0));
    s.shock_speed = mach * c1;
    const double un = s.shock_speed * (1.0 - s.pre.rho / rho2);
    const double theta = angle_deg * std::numbers::pi / 180.0;
    s.post = prim(rho2, un * std::sin(theta), -un * std::cos(theta), p2);
    return s;
}

} // namespace igrfv
