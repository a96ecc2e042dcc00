#include "igrfv/boundary.hpp"
#include "igrfv/cases.hpp"
#include "igrfv/errors.hpp"
#include "igrfv/integrate.hpp"
#include "igrfv/reference_kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace igrfv;

namespace {

const double kTwoPi = 6.283185307179586;

ConservedField smooth_periodic(const Grid& g, double shift = 0.0) {
    ConservedField f(g, 1.4);
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const double x = g.center(0, i) - shift;
            const double y = g.dim == 2 ? g.center(1, j) : 0.0;
            const PrimitiveState w{1.0 + 0.3 * std::sin(kTwoPi * (x + 0.5 * y)),
                                   {0.4 * std::cos(kTwoPi * x), g.dim == 2 ? 0.3 * std::sin(kTwoPi * y) : 0.0},
                                   1.0 + 0.2 * std::cos(kTwoPi * (x - y))};
            f.set_state(i, j, prim_to_cons(w, f.eos()));
        }
    }
    return f;
}

double max_abs_diff(const ConservedField& a, const ConservedField& b) {
    double m = 0.0;
    const Grid& g = a.grid();
    for (int v : active_vars(g.dim))
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) m = std::max(m, std::abs(a.at(v, i, j) - b.at(v, i, j)));
    return m;
}

bool bitwise_equal(const ConservedField& a, const ConservedField& b) {
    for (int v : active_vars(a.dim())) {
        const auto x = a.var(v);
        const auto y = b.var(v);
        if (!std::equal(x.begin(), x.end(), y.begin())) return false;
    }
    return true;
}

std::vector<SchemeConfig> all_configs(int dim) {
    std::vector<SchemeConfig> out;
    for (Scheme s : {Scheme::igr, Scheme::weno5, Scheme::lad, Scheme::plain}) {
        if (s == Scheme::lad && dim != 1) continue;
        for (FluxKind fk : {FluxKind::rusanov, FluxKind::hllc}) {
            std::vector<ReconstructionKind> recons;
            if (s == Scheme::weno5) recons = {ReconstructionKind::weno5};
            else recons = {ReconstructionKind::linear1, ReconstructionKind::linear3, ReconstructionKind::linear5};
            for (auto r : recons) {
                SchemeConfig c = default_scheme_config(s, dim);
                c.flux = fk;
                c.recon = r;
                c.igr.rel_tol = 1e-13;
                out.push_back(c);
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("compute_dt") {
    const Grid g = Grid::line(0.0, 1.0, 10);
    ConservedField f(g, 1.4);
    f.fill(prim_to_cons({1.4, {1.0, 0}, 1.0}, f.eos()));
    CHECK(compute_dt(f, 0.5) == doctest::Approx(0.5 / (2.0 / 0.1)));

    const Grid g2 = Grid::rect(0.0, 1.0, 10, 0.0, 1.0, 20);
    ConservedField f2(g2, 1.4);
    f2.fill(prim_to_cons({1.4, {1.0, -2.0}, 1.0}, f2.eos()));
    CHECK(compute_dt(f2, 0.3) == doctest::Approx(0.3 / (2.0 / 0.1 + 3.0 / 0.05)));
}

TEST_CASE("scheme validation") {
    SchemeConfig c = default_scheme_config(Scheme::igr, 1);
    CHECK_NOTHROW(c.validate(1));
    c.recon = ReconstructionKind::weno5;
    CHECK_THROWS_AS(c.validate(1), std::invalid_argument);
    SchemeConfig w = default_scheme_config(Scheme::weno5, 1);
    CHECK(w.recon == ReconstructionKind::weno5);
    w.recon = ReconstructionKind::linear5;
    CHECK_THROWS_AS(w.validate(1), std::invalid_argument);
    SchemeConfig l = default_scheme_config(Scheme::lad, 1);
    CHECK_THROWS_AS(l.validate(2), std::invalid_argument);
    SchemeConfig bad = default_scheme_config(Scheme::plain, 2);
    bad.cfl = 1.5;
    CHECK_THROWS_AS(bad.validate(2), std::invalid_argument);
    bad.cfl = 0.0;
    CHECK_THROWS_AS(bad.validate(2), std::invalid_argument);
    SchemeConfig neg = default_scheme_config(Scheme::igr, 1);
    neg.alpha = -1.0;
    CHECK_THROWS_AS(neg.validate(1), std::invalid_argument);

    CHECK(default_scheme_config(Scheme::igr, 1).cfl == doctest::Approx(0.4));
    CHECK(default_scheme_config(Scheme::igr, 2).cfl == doctest::Approx(0.3));
    CHECK(default_scheme_config(Scheme::igr, 1).igr.rel_tol == doctest::Approx(1e-6));
    CHECK(default_scheme_config(Scheme::igr, 2).igr.rel_tol == doctest::Approx(1e-4));

    const Grid g = Grid::rect(0.0, 2.0, 10, 0.0, 1.0, 20);
    SchemeConfig a = default_scheme_config(Scheme::igr, 2);
    CHECK(a.resolved_alpha(g) == doctest::Approx(2.0 * 0.04));
    a.alpha = 0.5;
    CHECK(a.resolved_alpha(g) == doctest::Approx(0.5));
}

TEST_CASE("scheme names") {
    for (Scheme s : {Scheme::igr, Scheme::weno5, Scheme::lad, Scheme::plain})
        CHECK(scheme_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(scheme_from_string("muscl"), std::invalid_argument);
}

TEST_CASE("free stream is preserved") {
    for (int dim : {1, 2}) {
        const Grid g = dim == 1 ? Grid::line(0, 1, 16) : Grid::rect(0, 1, 12, 0, 1, 10);
        const BoundarySpec bc = BoundarySpec::uniform(dim, BoundaryKind::periodic);
        ConservedField f(g, 1.4);
        f.fill(prim_to_cons({0.8, {0.5, dim == 2 ? -0.25 : 0.0}, 1.7}, f.eos()));
        for (const SchemeConfig& c : all_configs(dim)) {
            CAPTURE(to_string(c.scheme));
            CAPTURE(to_string(c.recon));
            const ConservedField r = semi_discrete_rhs(f, c, bc, 0.0);
            for (int v : active_vars(dim))
                for (int j = 0; j < g.ny(); ++j)
                    for (int i = 0; i < g.nx(); ++i) CHECK(std::abs(r.at(v, i, j)) <= 1e-13);
        }
    }
}

TEST_CASE("optimized rhs matches serial and reference kernels") {
    for (int dim : {1, 2}) {
        const Grid g = dim == 1 ? Grid::line(0, 1, 64) : Grid::rect(0, 1, 20, 0, 2, 14);
        BoundarySpec bc = BoundarySpec::uniform(dim, BoundaryKind::periodic);
        if (dim == 2) {
            bc.sides[1][0] = BoundarySide::of(BoundaryKind::reflective_wall);
            bc.sides[1][1] = BoundarySide::of(BoundaryKind::zero_gradient);
        }
        const ConservedField f = smooth_periodic(g);
        for (const SchemeConfig& c : all_configs(dim)) {
            CAPTURE(dim);
            CAPTURE(to_string(c.scheme));
            CAPTURE(to_string(c.flux));
            CAPTURE(to_string(c.recon));
            ConservedField up = f, us = f, rp(g, 1.4), rs(g, 1.4);
            RhsEvaluator par(g, c, bc, Exec::parallel);
            RhsEvaluator ser(g, c, bc, Exec::serial);
            par.evaluate(up, 0.0, rp);
            ser.evaluate(us, 0.0, rs);
            CHECK(bitwise_equal(rp, rs));

            std::vector<double> pad(g.padded_count(), 0.0);
            if (c.scheme == Scheme::igr) fill_sigma_padded(g, par.sigma(), pad);
            const ConservedField ref = reference::semi_discrete_rhs(up, c, pad);
            double scale = 0.0;
            for (int v : active_vars(dim))
                for (double x : rp.var(v)) scale = std::max(scale, std::abs(x));
            CHECK(max_abs_diff(rp, ref) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("translation equivariance on periodic grids") {
    for (int dim : {1, 2}) {
        const int m = 40;
        const Grid g = dim == 1 ? Grid::line(0, 1, m) : Grid::rect(0, 1, m, 0, 1, 8);
        const BoundarySpec bc = BoundarySpec::uniform(dim, BoundaryKind::periodic);
        const int k = 7;
        const ConservedField a = smooth_periodic(g);
        const ConservedField b = smooth_periodic(g, k * g.spacing[0]);
        for (Scheme s : {Scheme::igr, Scheme::weno5, Scheme::plain}) {
            SchemeConfig c = default_scheme_config(s, dim);
            c.igr.rel_tol = 1e-14;
            const ConservedField ra = semi_discrete_rhs(a, c, bc, 0.0);
            const ConservedField rb = semi_discrete_rhs(b, c, bc, 0.0);
            double worst = 0.0;
            for (int v : active_vars(dim))
                for (int j = 0; j < g.ny(); ++j)
                    for (int i = 0; i < m; ++i)
                        worst = std::max(worst, std::abs(ra.at(v, i, j) - rb.at(v, (i + k) % m, j)));
            CAPTURE(to_string(s));
            CHECK(worst <= 1e-10);
        }
    }
}

TEST_CASE("runs are deterministic and thread-independent") {
    const Grid g = Grid::rect(0, 1, 24, 0, 1, 24);
    const BoundarySpec bc = BoundarySpec::uniform(2, BoundaryKind::periodic);
    const SchemeConfig c = default_scheme_config(Scheme::igr, 2);
    Solver a(smooth_periodic(g), c, bc, Exec::parallel);
    Solver b(smooth_periodic(g), c, bc, Exec::parallel);
    Solver s(smooth_periodic(g), c, bc, Exec::serial);
    a.advance_to(0.05);
    b.advance_to(0.05);
    s.advance_to(0.05);
    CHECK(a.steps() == b.steps());
    CHECK(bitwise_equal(a.field(), b.field()));
    CHECK(bitwise_equal(a.field(), s.field()));
}

TEST_CASE("final step lands on t_final") {
    const Grid g = Grid::line(0, 1, 32);
    Solver s(smooth_periodic(g), default_scheme_config(Scheme::plain, 1),
             BoundarySpec::uniform(1, BoundaryKind::periodic));
    int calls = 0;
    s.advance_to(0.0123, [&](const StepRecord& r) {
        ++calls;
        CHECK(r.dt > 0.0);
    });
    CHECK(s.time() == 0.0123);
    CHECK(calls == s.steps());
}

TEST_CASE("SSP-RK3 is third order in time") {
    const Grid g = Grid::line(0, 1, 32);
    const BoundarySpec bc = BoundarySpec::uniform(1, BoundaryKind::periodic);
    const SchemeConfig c = default_scheme_config(Scheme::plain, 1);
    auto integrate = [&](int n) {
        ConservedField u = smooth_periodic(g);
        RhsEvaluator op(g, c, bc, Exec::serial);
        SspRk3 rk(g);
        const double dt = 0.08 / n;
        for (int k = 0; k < n; ++k) rk.step(u, op, k * dt, dt);
        return u;
    };
    const ConservedField fine = integrate(256);
    const double e1 = max_abs_diff(integrate(8), fine);
    const double e2 = max_abs_diff(integrate(16), fine);
    const double e3 = max_abs_diff(integrate(32), fine);
    CHECK(std::log2(e1 / e2) == doctest::Approx(3.0).epsilon(0.1));
    CHECK(std::log2(e2 / e3) == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("periodic runs conserve mass, momentum and energy") {
    const Grid g = Grid::line(0, 1, 64);
    const BoundarySpec bc = BoundarySpec::uniform(1, BoundaryKind::periodic);
    for (Scheme s : {Scheme::igr, Scheme::weno5, Scheme::plain}) {
        SchemeConfig c = default_scheme_config(s, 1);
        if (s == Scheme::weno5) c.flux = FluxKind::hllc;
        Solver sol(smooth_periodic(g), c, bc);
        const Invariants i0 = total_invariants(sol.field());
        for (int k = 0; k < 50; ++k) sol.step(1.0);
        const Invariants i1 = total_invariants(sol.field());
        CHECK(std::abs(i1.mass - i0.mass) <= 1e-13 * std::abs(i0.mass));
        CHECK(std::abs(i1.momentum[0] - i0.momentum[0]) <= 1e-13);
        CHECK(std::abs(i1.energy - i0.energy) <= 1e-13 * std::abs(i0.energy));
    }
}

TEST_CASE("blow-ups carry step and stage") {
    CaseOverrides o;
    o.eps = 0.0;
    BuiltCase b = build_case("leblanc", 200, o);
    Solver s(b.field, default_scheme_config(Scheme::plain, 1), b.bc);
    try {
        s.advance_to(b.spec.t_final);
        FAIL("expected a blow-up");
    } catch (const NonPhysicalState& e) {
        CHECK(e.step() >= 1);
        CHECK(e.stage() >= 0);
        CHECK(e.stage() <= 2);
        CHECK(e.describe().find("step") != std::string::npos);
    }
}

TEST_CASE("solver rejects non-physical initial data") {
    const Grid g = Grid::line(0, 1, 8);
    ConservedField f(g, 1.4);
    f.fill({1.0, {0, 0}, -1.0});
    CHECK_THROWS_AS(Solver(f, default_scheme_config(Scheme::plain, 1),
                           BoundarySpec::uniform(1, BoundaryKind::periodic)),
                    NonPhysicalState);
}
