#pragma once

#include "igrfv/field.hpp"
#include "igrfv/state.hpp"

#include <array>
#include <functional>
#include <vector>

namespace igrfv {

enum class BoundaryKind { periodic, zero_gradient, reflective_wall, dirichlet };

// Primitive state prescribed at a ghost-cell center (x, y) and time t.
using DirichletFn = std::function<PrimitiveState(double x, double y, double t)>;

// A run of boundary cells sharing one treatment. `start` is the tangential
// coordinate where the segment begins; ignored on 1D sides.
struct BoundarySegment {
    double start = -1e300;
    BoundaryKind kind = BoundaryKind::zero_gradient;
    DirichletFn fn;
};

struct BoundarySide {
    std::vector<BoundarySegment> segments;

    static BoundarySide of(BoundaryKind kind);
    static BoundarySide dirichlet(DirichletFn fn);

    // Segment covering tangential coordinate s (last segment with start <= s).
    const BoundarySegment& at(double s) const;
    bool is_periodic() const;
};

// Per-axis, per-side boundary treatment: sides[axis][0] is the low side.
struct BoundarySpec {
    std::array<std::array<BoundarySide, 2>, 2> sides;

    static BoundarySpec uniform(int dim, BoundaryKind kind);

    bool periodic(int axis) const { return sides[axis][0].is_periodic(); }

    // Throws std::invalid_argument if periodicity is unpaired or a segment
    // list is empty / unsorted / missing its function.
    void validate(int dim) const;
};

// Fills every ghost cell of `field` at time t. Interior cells are untouched.
// In 2D, x-sides are filled first for interior rows, then y-sides for the
// full padded width, so corner ghosts take values from the x-ghosts.
void apply_boundary(ConservedField& field, const BoundarySpec& bc, double t);

} // namespace igrfv
