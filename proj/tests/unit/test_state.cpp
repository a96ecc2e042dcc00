#include "igrfv/boundary.hpp"
#include "igrfv/errors.hpp"
#include "igrfv/field.hpp"
#include "igrfv/grid.hpp"
#include "igrfv/state.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace igrfv;

TEST_CASE("prim/cons round trip") {
    const EosParams eos{1.4};
    const PrimitiveState w{0.7, {1.3, -0.4}, 2.5};
    const ConservedState u = prim_to_cons(w, eos);
    CHECK(u.rho == doctest::Approx(0.7));
    CHECK(u.mom[0] == doctest::Approx(0.91));
    CHECK(u.E == doctest::Approx(2.5 / 0.4 + 0.5 * 0.7 * (1.69 + 0.16)));
    const PrimitiveState back = cons_to_prim(u, eos);
    CHECK(back.rho == doctest::Approx(w.rho).epsilon(1e-14));
    CHECK(back.vel[0] == doctest::Approx(w.vel[0]).epsilon(1e-14));
    CHECK(back.vel[1] == doctest::Approx(w.vel[1]).epsilon(1e-14));
    CHECK(back.p == doctest::Approx(w.p).epsilon(1e-14));
}

TEST_CASE("sound speed") {
    CHECK(sound_speed({1.4, {0, 0}, 1.0}, {1.4}) == doctest::Approx(1.0));
    CHECK(sound_speed({1.0, {0, 0}, 1.0}, {5.0 / 3.0}) == doctest::Approx(std::sqrt(5.0 / 3.0)));
}

TEST_CASE("non-physical states are rejected") {
    const EosParams eos{1.4};
    CHECK_THROWS_AS(cons_to_prim({-1.0, {0, 0}, 1.0}, eos), NonPhysicalState);
    CHECK_THROWS_AS(cons_to_prim({1.0, {2.0, 0}, 1.0}, eos), NonPhysicalState);
    CHECK_THROWS_AS(cons_to_prim({1.0, {std::numeric_limits<double>::quiet_NaN(), 0}, 1.0}, eos),
                    NonPhysicalState);
    CHECK_THROWS_AS(prim_to_cons({1.0, {0, 0}, -1.0}, eos), std::invalid_argument);
    CHECK_THROWS_AS(prim_to_cons({0.0, {0, 0}, 1.0}, eos), std::invalid_argument);
}

TEST_CASE("grid indexing") {
    const Grid g = Grid::rect(0.0, 2.0, 8, -1.0, 1.0, 16);
    CHECK(g.dim == 2);
    CHECK(g.spacing[0] == doctest::Approx(0.25));
    CHECK(g.spacing[1] == doctest::Approx(0.125));
    CHECK(g.padded_nx() == 8 + 2 * kGhost);
    CHECK(g.padded_count() == static_cast<std::size_t>((8 + 2 * kGhost) * (16 + 2 * kGhost)));
    CHECK(g.index(0, 0) == static_cast<std::size_t>(kGhost * g.padded_nx() + kGhost));
    CHECK(g.index(1, 0) - g.index(0, 0) == 1);
    CHECK(g.index(0, 1) - g.index(0, 0) == static_cast<std::size_t>(g.stride(1)));
    CHECK(g.center(1, 0) == doctest::Approx(-0.9375));
    CHECK(g.max_spacing() == doctest::Approx(0.25));
    CHECK_THROWS_AS(Grid::line(0.0, 1.0, 5), std::invalid_argument);

    const Grid l = Grid::line(0.0, 1.0, 10);
    CHECK(l.ny() == 1);
    CHECK(l.index(-kGhost) == 0);
}

TEST_CASE("check_physical names the first bad cell") {
    const Grid g = Grid::line(0.0, 1.0, 8);
    ConservedField f(g, 1.4);
    f.fill(prim_to_cons({1.0, {0, 0}, 1.0}, f.eos()));
    CHECK_NOTHROW(check_physical(f));
    f.at(kEnergy, 5) = 0.0;
    f.at(kRho, 6) = -1.0;
    try {
        check_physical(f);
        FAIL("expected NonPhysicalState");
    } catch (const NonPhysicalState& e) {
        CHECK(e.i() == 5);
        CHECK(e.pressure() <= 0.0);
    }
}

TEST_CASE("invariants sum interior cells only") {
    const Grid g = Grid::rect(0.0, 1.0, 8, 0.0, 2.0, 8);
    ConservedField f(g, 1.4);
    f.fill({2.0, {1.0, -3.0}, 7.0});
    f.at(kRho, -1, 0) = 1e6;
    const Invariants inv = total_invariants(f);
    CHECK(inv.mass == doctest::Approx(4.0));
    CHECK(inv.momentum[0] == doctest::Approx(2.0));
    CHECK(inv.momentum[1] == doctest::Approx(-6.0));
    CHECK(inv.energy == doctest::Approx(14.0));
}

TEST_CASE("axpby touches every slot") {
    const Grid g = Grid::line(0.0, 1.0, 6);
    ConservedField a(g, 1.4), b(g, 1.4);
    a.fill({1.0, {2.0, 0.0}, 3.0});
    b.fill({4.0, {5.0, 0.0}, 6.0});
    b.axpby(2.0, a, 0.5);
    CHECK(b.at(kRho, -3) == doctest::Approx(4.0));
    CHECK(b.at(kMomX, 3) == doctest::Approx(6.5));
    CHECK(b.at(kEnergy, 8) == doctest::Approx(9.0));
}

TEST_CASE("boundary kinds fill ghosts") {
    const Grid g = Grid::line(0.0, 1.0, 6);
    ConservedField f(g, 1.4);
    for (int i = 0; i < 6; ++i) f.set_state(i, 0, {1.0 + i, {0.5 * (i + 1), 0.0}, 10.0 + i});

    SUBCASE("periodic") {
        apply_boundary(f, BoundarySpec::uniform(1, BoundaryKind::periodic), 0.0);
        CHECK(f.at(kRho, -1) == 6.0);
        CHECK(f.at(kRho, -3) == 4.0);
        CHECK(f.at(kRho, 6) == 1.0);
        CHECK(f.at(kRho, 8) == 3.0);
    }
    SUBCASE("zero gradient") {
        apply_boundary(f, BoundarySpec::uniform(1, BoundaryKind::zero_gradient), 0.0);
        CHECK(f.at(kRho, -3) == 1.0);
        CHECK(f.at(kEnergy, 8) == 15.0);
    }
    SUBCASE("reflective wall") {
        apply_boundary(f, BoundarySpec::uniform(1, BoundaryKind::reflective_wall), 0.0);
        CHECK(f.at(kRho, -1) == 1.0);
        CHECK(f.at(kRho, -2) == 2.0);
        CHECK(f.at(kMomX, -1) == -0.5);
        CHECK(f.at(kMomX, 6) == -3.0);
    }
    SUBCASE("dirichlet sees ghost centers and time") {
        BoundarySpec bc = BoundarySpec::uniform(1, BoundaryKind::zero_gradient);
        bc.sides[0][0] = BoundarySide::dirichlet([](double x, double, double t) {
            return PrimitiveState{1.0 + t, {0.0, 0.0}, 1.0 - x};
        });
        apply_boundary(f, bc, 0.25);
        CHECK(f.at(kRho, -1) == doctest::Approx(1.25));
        const double x = g.center(0, -2);
        CHECK(f.primitive(-2).p == doctest::Approx(1.0 - x));
    }
}

TEST_CASE("2D boundary segments switch along the side") {
    const Grid g = Grid::rect(0.0, 1.0, 8, 0.0, 1.0, 8);
    ConservedField f(g, 1.4);
    f.fill({1.0, {0.0, 1.0}, 5.0});
    BoundarySpec bc = BoundarySpec::uniform(2, BoundaryKind::zero_gradient);
    bc.sides[1][0].segments = {{-1e300, BoundaryKind::zero_gradient, {}},
                               {0.5, BoundaryKind::reflective_wall, {}}};
    CHECK_NOTHROW(bc.validate(2));
    apply_boundary(f, bc, 0.0);
    CHECK(f.at(kMomY, 0, -1) == 1.0);
    CHECK(f.at(kMomY, 7, -1) == -1.0);
}

TEST_CASE("boundary validation") {
    BoundarySpec bc = BoundarySpec::uniform(1, BoundaryKind::periodic);
    bc.sides[0][1] = BoundarySide::of(BoundaryKind::zero_gradient);
    CHECK_THROWS_AS(bc.validate(1), std::invalid_argument);
    BoundarySpec d = BoundarySpec::uniform(1, BoundaryKind::zero_gradient);
    d.sides[0][0].segments[0].kind = BoundaryKind::dirichlet;
    CHECK_THROWS_AS(d.validate(1), std::invalid_argument);
}
