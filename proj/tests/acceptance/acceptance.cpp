// Acceptance checks, one per criterion. Each prints a single PASS/FAIL line.
//   igrfv_acceptance --criterion 7
//   igrfv_acceptance            (all of them, slow)

#include "../common/oracles.hpp"

#include "igrfv/cases.hpp"
#include "igrfv/config.hpp"
#include "igrfv/diagnostics.hpp"
#include "igrfv/driver.hpp"
#include "igrfv/flux.hpp"
#include "igrfv/igr.hpp"
#include "igrfv/integrate.hpp"
#include "igrfv/reconstruct.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace igrfv;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string join(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + fmt(v[k]);
    return s + "]";
}

bool in_range(double v, double lo, double hi) { return v >= lo && v <= hi; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Orders are judged on the finest pair: the coarsest members are often
// outside the asymptotic range.
double finest_order(const std::vector<double>& orders) { return orders.back(); }

RunConfig run_config(const std::string& name, int m, const SchemeConfig& s, CaseOverrides o = {}) {
    RunConfig rc;
    rc.case_name = name;
    rc.resolution = m;
    rc.scheme = s;
    rc.overrides = std::move(o);
    return rc;
}

SchemeConfig scheme(Scheme kind, int dim, double alpha_factor = 2.0) {
    SchemeConfig c = default_scheme_config(kind, dim);
    c.alpha_factor = alpha_factor;
    return c;
}

ConservedField random_field(const Grid& g, const BoundarySpec& bc, unsigned seed) {
    ConservedField f(g, 1.4);
    const auto rho = oracle::smooth_random(g.nx(), g.ny(), 0.5, 2.0, seed);
    const auto u = oracle::smooth_random(g.nx(), g.ny(), -1.0, 1.0, seed + 1);
    const auto v = oracle::smooth_random(g.nx(), g.ny(), -1.0, 1.0, seed + 2);
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const std::size_t c = static_cast<std::size_t>(j) * g.nx() + i;
            f.set_state(i, j, prim_to_cons({rho[c], {u[c], g.dim == 2 ? v[c] : 0.0}, 1.0}, f.eos()));
        }
    }
    apply_boundary(f, bc, 0.0);
    return f;
}

std::vector<double> interior_rho(const ConservedField& f) {
    std::vector<double> r;
    for (int j = 0; j < f.grid().ny(); ++j)
        for (int i = 0; i < f.grid().nx(); ++i) r.push_back(f.at(kRho, i, j));
    return r;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

Verdict elliptic_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    auto check = [&](const Grid& g, BoundaryKind kind, unsigned seed) {
        const BoundarySpec bc = BoundarySpec::uniform(g.dim, kind);
        const ConservedField f = random_field(g, bc, seed);
        SigmaField sig = make_sigma_field(g, bc);
        IgrParams p;
        p.alpha = 2.0 * g.max_spacing() * g.max_spacing();
        p.rel_tol = 1e-13;
        p.cold_sweeps = 10000;
        solve_sigma(f, p, sig);
        std::vector<double> src(g.interior_count());
        igr_source_field(f, p.alpha, src, Exec::serial);
        const auto rho = interior_rho(f);
        const auto exact = oracle::dense_solve(oracle::elliptic_matrix(sig.layout, rho, p.alpha), src);
        for (std::size_t k = 0; k < exact.size(); ++k) worst = std::max(worst, std::abs(exact[k] - sig.values[k]));
    };
    check(Grid::line(0, 1, 64), BoundaryKind::zero_gradient, 1);
    check(Grid::line(0, 1, 64), BoundaryKind::periodic, 2);
    check(Grid::rect(0, 1, 32, 0, 1, 32), BoundaryKind::zero_gradient, 3);
    check(Grid::rect(0, 1, 32, 0, 1, 32), BoundaryKind::periodic, 4);
    const double wall = seconds_since(t0);
    return {worst <= 1e-8 && wall < 1.0, "Linf vs dense solve " + fmt(worst) + ", " + fmt(wall) + " s"};
}

Verdict trivial_sigma() {
    double worst = 0.0;
    for (int dim : {1, 2}) {
        const Grid g = dim == 1 ? Grid::line(0, 1, 64) : Grid::rect(0, 1, 32, 0, 1, 32);
        const BoundarySpec bc = BoundarySpec::uniform(dim, BoundaryKind::periodic);
        ConservedField uni(g, 1.4);
        uni.fill(prim_to_cons({1.3, {0.7, dim == 2 ? -0.4 : 0.0}, 2.0}, uni.eos()));
        apply_boundary(uni, bc, 0.0);
        SigmaField s = make_sigma_field(g, bc);
        IgrParams p;
        p.alpha = 2.0 * g.max_spacing() * g.max_spacing();
        solve_sigma(uni, p, s);
        worst = std::max(worst, max_abs(s.values));

        const ConservedField rnd = random_field(g, bc, 11);
        SigmaField z = make_sigma_field(g, bc);
        std::fill(z.values.begin(), z.values.end(), 3.0);
        p.alpha = 0.0;
        solve_sigma(rnd, p, z);
        worst = std::max(worst, max_abs(z.values));
    }
    return {worst <= 1e-14, "max |Sigma| " + fmt(worst)};
}

Verdict conservation() {
    std::string detail;
    bool ok = true;
    auto audit = [&](const std::string& label, SchemeConfig c, bool energy) {
        BuiltCase b = build_case("convergence_sine", 200);
        Solver s(b.field, c, b.bc);
        const Invariants i0 = total_invariants(s.field());
        const Invariants sc = invariant_scales(s.field());
        for (int k = 0; k < 100; ++k) s.step(1e9);
        const Invariants i1 = total_invariants(s.field());
        double d = std::max(relative_drift(i1.mass, i0.mass, sc.mass),
                            relative_drift(i1.momentum[0], i0.momentum[0], sc.momentum[0]));
        if (energy) d = std::max(d, relative_drift(i1.energy, i0.energy, sc.energy));
        ok = ok && d <= 1e-12;
        detail += label + " " + fmt(d) + "; ";
    };
    audit("igr+lf", scheme(Scheme::igr, 1), true);
    SchemeConfig w = scheme(Scheme::weno5, 1);
    w.flux = FluxKind::hllc;
    audit("weno5+hllc", w, true);
    audit("lad (mass/momentum)", scheme(Scheme::lad, 1), false);
    return {ok, "max relative drift after 100 steps: " + detail};
}

// Runs a study config and returns (pre-shock orders, post-shock orders).
std::pair<std::vector<double>, std::vector<double>> study_orders(const std::string& text) {
    const RunConfig cfg = parse_config(text);
    std::ostringstream log;
    const auto tables = run_convergence_study(cfg, log);
    std::pair<std::vector<double>, std::vector<double>> out;
    for (std::size_t k = 1; k < tables[0].rows.size(); ++k) out.first.push_back(tables[0].rows[k].order);
    for (std::size_t k = 1; k < tables[1].rows.size(); ++k) out.second.push_back(tables[1].rows[k].order);
    return out;
}

std::string sine_study(const std::string& run_keys, const std::string& study_keys) {
    return "case = convergence_sine\nscheme = igr\n" + run_keys + "[igr]\nsolver = direct\n[study]\n" + study_keys;
}

Verdict regime_fixed_alpha() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [pre, post] = study_orders(sine_study("", "regime = fixed_alpha\nalpha = 1e-4\n"
                                                                  "resolutions = 100, 200, 400, 800\ntimes = 0.15, 0.4\n"));
    const double wall = seconds_since(t0);
    const bool ok = in_range(finest_order(pre), 1.6, 2.4) && in_range(finest_order(post), 1.3, 2.4) && wall < 120.0;
    return {ok, "pre-shock orders " + join(pre) + ", post-shock " + join(post) + ", " + fmt(wall) + " s"};
}

Verdict regime_joint() {
    const auto [pre, post] = study_orders(sine_study("", "regime = joint\njoint_factor = 1\n"
                                                                  "resolutions = 100, 200, 400, 800\ntimes = 0.15, 0.4\n"));
    const bool ok = in_range(finest_order(pre), 1.6, 2.4) && in_range(finest_order(post), 0.7, 1.3);
    return {ok, "pre-shock orders " + join(pre) + ", post-shock " + join(post)};
}

Verdict regime_alpha_sweep() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [pre, post] = study_orders(sine_study("m = 4096\n", "regime = alpha_sweep\n"
                                                                  "alphas = 1e-3, 1e-4, 1e-5, 1e-6\ntimes = 0.15, 0.4\n"));
    const double wall = seconds_since(t0);
    const bool ok = in_range(finest_order(pre), 0.7, 1.3) && in_range(finest_order(post), 0.35, 0.7) && wall < 300.0;
    return {ok, "pre-shock orders in alpha " + join(pre) + ", post-shock " + join(post) + ", " + fmt(wall) + " s"};
}

Verdict sod() {
    std::vector<std::pair<double, double>> errs;
    std::vector<double> values;
    for (int m : {200, 400, 800}) {
        const SimulationOutcome o = simulate(run_config("sod", m, scheme(Scheme::igr, 1)), {});
        if (o.failure) return {false, "m=" + std::to_string(m) + " blew up: " + *o.failure};
        const ConservedField& f = o.snapshots.back().field;
        const double e = error_norm(f, o.built.spec.reference, o.snapshots.back().t, Quantity::rho, Norm::L1);
        errs.push_back({f.grid().spacing[0], e});
        values.push_back(e);
    }
    const auto orders = observed_order(errs);
    const bool decreasing = values[1] < values[0] && values[2] < values[1];
    const bool ok = decreasing && in_range(finest_order(orders), 0.6, 1.2);
    return {ok, "L1 rho errors " + join(values) + ", orders " + join(orders)};
}

Verdict leblanc() {
    std::vector<double> errs;
    std::string detail;
    bool igr_ok = true;
    for (int m : {900, 1800}) {
        const SimulationOutcome o = simulate(run_config("leblanc", m, scheme(Scheme::igr, 1)), {});
        if (o.failure) {
            igr_ok = false;
            detail += "igr m=" + std::to_string(m) + " aborted (" + *o.failure + "); ";
            continue;
        }
        const ConservedField& f = o.snapshots.back().field;
        errs.push_back(error_norm(f, o.built.spec.reference, o.snapshots.back().t,
                                  Quantity::internal_energy, Norm::L1));
        detail += "igr m=" + std::to_string(m) + " e-error " + fmt(errs.back()) + "; ";
    }
    if (igr_ok) igr_ok = errs[1] < errs[0];
    bool weno_crash = true;
    for (int m : {900, 1800}) {
        const SimulationOutcome o = simulate(run_config("leblanc", m, scheme(Scheme::weno5, 1)), {});
        weno_crash = weno_crash && o.failure.has_value();
        detail += std::string("weno5 m=") + std::to_string(m) + (o.failure ? " crashed; " : " completed; ");
    }
    return {igr_ok && weno_crash, detail};
}

double peak_speed(const ConservedField& f) {
    double m = 0.0;
    for (int i = 0; i < f.grid().nx(); ++i) m = std::max(m, std::abs(f.primitive(i).vel[0]));
    return m;
}

Verdict sine_wave() {
    auto final_field = [](const SchemeConfig& c, int m) {
        const SimulationOutcome o = simulate(run_config("acoustic_sine", m, c), {});
        if (o.failure) throw std::runtime_error("acoustic_sine m=" + std::to_string(m) + " blew up");
        return o.snapshots.back().field;
    };
    const ConservedField ref = final_field(scheme(Scheme::weno5, 1), 4096);
    auto err = [&](const ConservedField& f) { return error_norm(f, ref, Quantity::u, Norm::Linf); };
    const double e_igr = err(final_field(scheme(Scheme::igr, 1), 300));
    const double e_weno = err(final_field(scheme(Scheme::weno5, 1), 300));
    const double e10 = err(final_field(scheme(Scheme::igr, 1, 10.0), 300));
    const double e100 = err(final_field(scheme(Scheme::igr, 1, 100.0), 300));
    SchemeConfig lad = scheme(Scheme::lad, 1);
    lad.lad.coeff = 10.0;
    const double a10 = peak_speed(final_field(lad, 300));
    lad.lad.coeff = 100.0;
    const double a100 = peak_speed(final_field(lad, 300));
    const double spread = std::abs(e100 - e10) / e10;
    const bool ok = e_igr < e_weno && spread < 0.25 && a100 < 0.5 * a10;
    return {ok, "Linf u error igr " + fmt(e_igr) + " vs weno5 " + fmt(e_weno) + "; igr 10/100 D^2 " + fmt(e10) +
                    "/" + fmt(e100) + " (spread " + fmt(spread) + "); lad peak 10/100 " + fmt(a10) + "/" + fmt(a100)};
}

Verdict vortex() {
    const auto t0 = std::chrono::steady_clock::now();
    auto error_at = [](Scheme kind, double af, int m) {
        SchemeConfig c = scheme(kind, 2, af);
        c.cfl = 0.6;
        const SimulationOutcome o = simulate(run_config("isentropic_vortex", m, c), {});
        if (o.failure) throw std::runtime_error("vortex m=" + std::to_string(m) + " blew up");
        const Snapshot& s = o.snapshots.back();
        return std::pair{s.field.grid().spacing[0], error_norm(s.field, o.built.spec.reference, s.t, Quantity::p, Norm::Linf)};
    };
    std::vector<std::pair<double, double>> plain, igr;
    for (int m : {50, 100, 150}) plain.push_back(error_at(Scheme::plain, 0.0, m));
    for (int m : {50, 100, 150}) igr.push_back(error_at(Scheme::igr, 2.0, m));
    const double e10 = error_at(Scheme::igr, 10.0, 50).second;
    const auto op = observed_order(plain);
    const auto oi = observed_order(igr);
    const double wall = seconds_since(t0);
    const bool ok = in_range(finest_order(op), 3.3, 4.7) && in_range(finest_order(oi), 1.5, 2.5) &&
                    e10 > igr[0].second && wall < 600.0;
    return {ok, "alpha=0 orders " + join(op) + ", alpha=2D^2 orders " + join(oi) + ", m=50 error 10D^2 " +
                    fmt(e10) + " vs 2D^2 " + fmt(igr[0].second) + ", " + fmt(wall) + " s"};
}

Verdict shu_osher() {
    const SimulationOutcome ref = simulate(run_config("shu_osher", 4000, scheme(Scheme::weno5, 1)), {});
    if (ref.failure) return {false, "reference blew up: " + *ref.failure};
    std::vector<double> errs;
    double lo = 1e300, hi = 0.0;
    for (int m : {200, 400}) {
        const SimulationOutcome o = simulate(run_config("shu_osher", m, scheme(Scheme::igr, 1)), {});
        if (o.failure) return {false, "igr m=" + std::to_string(m) + " blew up: " + *o.failure};
        for (const StepRecord& r : o.history) lo = std::min(lo, r.min_rho);
        const ConservedField& f = o.snapshots.back().field;
        for (int i = 0; i < f.grid().nx(); ++i) hi = std::max(hi, f.at(kRho, i));
        errs.push_back(error_norm(f, ref.snapshots.back().field, Quantity::rho, Norm::L1));
    }
    const bool ok = lo > 0.0 && hi <= 5.0 && errs[1] < errs[0];
    return {ok, "L1 rho errors m=200/400 " + join(errs) + ", rho range (" + fmt(lo) + ", " + fmt(hi) + "]"};
}

// Density standard deviation over the part of the initial high-pressure
// quadrant that no wave has reached by the final time.
struct QuadrantStats {
    double std_rho = 0.0;
    double mean_p = 0.0;
};

QuadrantStats unshocked_quadrant(const ConservedField& f) {
    const Grid& g = f.grid();
    double s = 0.0, s2 = 0.0, sp = 0.0;
    long n = 0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const double x = g.center(0, i), y = g.center(1, j);
            if (x < 0.88 || y < 0.88) continue;
            const PrimitiveState w = f.primitive(i, j);
            s += w.rho;
            s2 += w.rho * w.rho;
            sp += w.p;
            ++n;
        }
    }
    const double mean = s / n;
    return {std::sqrt(std::max(0.0, s2 / n - mean * mean)), sp / n};
}

Verdict riemann2d() {
    const int m = 250;
    auto run = [&](Scheme kind) {
        SimulationOutcome o = simulate(run_config("riemann2d", m, scheme(kind, 2)), {});
        return o;
    };
    const SimulationOutcome igr = run(Scheme::igr);
    if (igr.failure) return {false, "igr blew up: " + *igr.failure};
    double min_rho = 1e300, min_p = 1e300;
    for (const StepRecord& r : igr.history) {
        min_rho = std::min(min_rho, r.min_rho);
        min_p = std::min(min_p, r.min_p);
    }
    const SimulationOutcome weno = run(Scheme::weno5);
    if (weno.failure) return {false, "weno5 blew up: " + *weno.failure};
    const QuadrantStats qi = unshocked_quadrant(igr.snapshots.back().field);
    const QuadrantStats qw = unshocked_quadrant(weno.snapshots.back().field);
    const bool ok = min_rho > 0.0 && min_p > 0.0 && qi.std_rho >= 2.0 * qw.std_rho;
    return {ok, "quadrant rho std igr " + fmt(qi.std_rho) + " vs weno5 " + fmt(qw.std_rho) + " (mean p " +
                    fmt(qi.mean_p) + "), min rho " + fmt(min_rho) + ", min p " + fmt(min_p)};
}

Verdict double_mach() {
    SchemeConfig c = scheme(Scheme::igr, 2, 10.0);
    c.recon = ReconstructionKind::linear3;
    // tanh width equal to the regularized shock width sqrt(alpha)
    CaseOverrides o_eps;
    o_eps.eps = std::sqrt(10.0) * 4.0 / 400;
    const SimulationOutcome o = simulate(run_config("double_mach", 400, c, o_eps), {});
    if (o.failure) return {false, "blew up: " + *o.failure};
    double min_rho = 1e300;
    for (const StepRecord& r : o.history) min_rho = std::min(min_rho, r.min_rho);
    const Snapshot& s = o.snapshots.back();
    const bool ok = !o.summary.has_nan && min_rho > 0.0 && std::abs(s.t - 0.2) < 1e-12;
    return {ok, "eps " + fmt(*o_eps.eps) + ", reached t=" + fmt(s.t) + " in " + std::to_string(o.summary.steps) + " steps, min rho " + fmt(min_rho)};
}

// Scheme-level property suite.
Verdict properties() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> failed;
    const EosParams eos{1.4};

    // Consistency: F(U, U) = f(U) for every flux and axis.
    double worst = 0.0;
    for (const PrimitiveState& w : {PrimitiveState{1.0, {0.3, -0.2}, 1.0}, PrimitiveState{0.125, {-1.5, 0.7}, 0.1}}) {
        const ConservedState u = prim_to_cons(w, eos);
        for (int axis : {0, 1}) {
            const FluxVector f = physical_flux(u, axis, 0.0, eos);
            const FluxVector r = rusanov_flux(u, u, 0.0, axis, eos);
            const FluxVector h = hllc_flux(u, u, axis, eos);
            for (int k = 0; k < 4; ++k) worst = std::max({worst, std::abs(r[k] - f[k]), std::abs(h[k] - f[k])});
        }
    }
    if (worst > 1e-13) failed.push_back("flux consistency");

    // Polynomial exactness of linear5 for degrees 0..4 on cell averages.
    worst = 0.0;
    for (int deg = 0; deg <= 4; ++deg) {
        std::vector<double> c(deg + 1);
        for (int k = 0; k <= deg; ++k) c[k] = 1.0 + 0.5 * k;
        const double h = 0.1;
        std::array<double, 6> q{};
        for (int k = 0; k < 6; ++k) q[k] = oracle::poly_average(c, (k - 2) * h, h);
        const FacePair fp = reconstruct_pair(q, ReconstructionKind::linear5);
        const double exact = oracle::poly_value(c, 0.5 * h);
        worst = std::max({worst, std::abs(fp.left - exact), std::abs(fp.right - exact)});
    }
    if (worst > 1e-12) failed.push_back("reconstruction exactness");

    // Mirror symmetry: reversing the stencil swaps left and right.
    worst = 0.0;
    for (ReconstructionKind kind : {ReconstructionKind::linear3, ReconstructionKind::linear5, ReconstructionKind::weno5}) {
        const std::array<double, 6> q{0.3, 1.7, -0.4, 2.2, 0.9, 1.1};
        std::array<double, 6> r{};
        std::reverse_copy(q.begin(), q.end(), r.begin());
        const FacePair a = reconstruct_pair(q, kind);
        const FacePair b = reconstruct_pair(r, kind);
        worst = std::max({worst, std::abs(a.left - b.right), std::abs(a.right - b.left)});
    }
    {
        const ConservedState l = prim_to_cons({1.0, {0.4, 0.1}, 1.0}, eos);
        const ConservedState r = prim_to_cons({0.3, {-0.2, 0.5}, 0.4}, eos);
        auto flip = [](ConservedState u) { u.mom[0] = -u.mom[0]; return u; };
        for (int kind = 0; kind < 2; ++kind) {
            const FluxVector a = kind ? hllc_flux(l, r, 0, eos) : rusanov_flux(l, r, 0.0, 0, eos);
            const FluxVector b = kind ? hllc_flux(flip(r), flip(l), 0, eos) : rusanov_flux(flip(r), flip(l), 0.0, 0, eos);
            worst = std::max({worst, std::abs(a[0] + b[0]), std::abs(a[1] - b[1]), std::abs(a[2] + b[2]), std::abs(a[3] + b[3])});
        }
    }
    if (worst > 1e-13) failed.push_back("mirror symmetry");

    // Translation equivariance and determinism on periodic data.
    const Grid g = Grid::rect(0, 1, 40, 0, 1, 12);
    const BoundarySpec bc = BoundarySpec::uniform(2, BoundaryKind::periodic);
    auto smooth = [&](double shift) {
        ConservedField f(g, 1.4);
        const double tau = 2.0 * std::acos(-1.0);
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) {
                const double x = g.center(0, i) - shift, y = g.center(1, j);
                f.set_state(i, j, prim_to_cons({1.0 + 0.3 * std::sin(tau * x) * std::cos(tau * y),
                                                 {0.5 * std::cos(tau * x), 0.2 * std::sin(tau * y)},
                                                 1.0 + 0.2 * std::sin(tau * (x + y))}, f.eos()));
            }
        return f;
    };
    worst = 0.0;
    const int k = 7;
    for (Scheme s : {Scheme::igr, Scheme::weno5, Scheme::plain}) {
        SchemeConfig c = default_scheme_config(s, 2);
        c.igr.rel_tol = 1e-14;
        const ConservedField ra = semi_discrete_rhs(smooth(0.0), c, bc, 0.0);
        const ConservedField rb = semi_discrete_rhs(smooth(k * g.spacing[0]), c, bc, 0.0);
        for (int v : active_vars(2))
            for (int j = 0; j < g.ny(); ++j)
                for (int i = 0; i < g.nx(); ++i)
                    worst = std::max(worst, std::abs(ra.at(v, i, j) - rb.at(v, (i + k) % g.nx(), j)));
    }
    if (worst > 1e-10) failed.push_back("translation equivariance");

    const SchemeConfig c = default_scheme_config(Scheme::igr, 2);
    Solver a(smooth(0.0), c, bc, Exec::parallel), b(smooth(0.0), c, bc, Exec::parallel), s(smooth(0.0), c, bc, Exec::serial);
    a.advance_to(0.05);
    b.advance_to(0.05);
    s.advance_to(0.05);
    bool same = true;
    for (int v : active_vars(2)) {
        const auto va = a.field().var(v), vb = b.field().var(v), vs = s.field().var(v);
        same = same && std::equal(va.begin(), va.end(), vb.begin()) && std::equal(va.begin(), va.end(), vs.begin());
    }
    if (!same) failed.push_back("determinism");

    const double wall = seconds_since(t0);
    if (wall >= 30.0) failed.push_back("runtime");
    std::string detail = failed.empty() ? "all property groups hold" : "failed:";
    for (const auto& f : failed) detail += " " + f;
    return {failed.empty(), detail + ", " + fmt(wall) + " s"};
}

const std::map<int, std::pair<const char*, std::function<Verdict()>>>& criteria() {
    static const std::map<int, std::pair<const char*, std::function<Verdict()>>> table = {
        {1, {"elliptic oracle", elliptic_oracle}},
        {2, {"trivial sigma", trivial_sigma}},
        {3, {"conservation", conservation}},
        {4, {"convergence, fixed alpha", regime_fixed_alpha}},
        {5, {"convergence, alpha = dx^2", regime_joint}},
        {6, {"convergence, alpha sweep", regime_alpha_sweep}},
        {7, {"sod", sod}},
        {8, {"leblanc", leblanc}},
        {9, {"sine wave", sine_wave}},
        {10, {"isentropic vortex", vortex}},
        {11, {"shu-osher", shu_osher}},
        {12, {"2d riemann", riemann2d}},
        {13, {"double mach", double_mach}},
        {14, {"scheme properties", properties}},
    };
    return table;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"IGR solver acceptance checks"};
    std::vector<int> selected;
    app.add_option("-c,--criterion", selected, "Criterion number(s) to run; default all")
        ->check(CLI::Range(1, 14));
    CLI11_PARSE(app, argc, argv);
    if (selected.empty())
        for (const auto& [n, _] : criteria()) selected.push_back(n);

    int failures = 0;
    for (int n : selected) {
        const auto& [name, fn] = criteria().at(n);
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failures;
        std::printf("criterion %2d %-28s %s  %s\n", n, name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
