#include "igrfv/boundary.hpp"

#include <stdexcept>
#include <string>

namespace igrfv {

BoundarySide BoundarySide::of(BoundaryKind kind) {
    BoundarySide side;
    side.segments.push_back({-1e300, kind, {}});
    return side;
}

BoundarySide BoundarySide::dirichlet(DirichletFn fn) {
    BoundarySide side;
    side.segments.push_back({-1e300, BoundaryKind::dirichlet, std::move(fn)});
    return side;
}

const BoundarySegment& BoundarySide::at(double s) const {
    const BoundarySegment* hit = &segments.front();
    for (const auto& seg : segments) {
        if (seg.start <= s) hit = &seg;
    }
    return *hit;
}

bool BoundarySide::is_periodic() const {
    return segments.size() == 1 && segments.front().kind == BoundaryKind::periodic;
}

BoundarySpec BoundarySpec::uniform(int dim, BoundaryKind kind) {
    BoundarySpec bc;
    for (int axis = 0; axis < dim; ++axis) {
        bc.sides[axis][0] = BoundarySide::of(kind);
        bc.sides[axis][1] = BoundarySide::of(kind);
    }
    return bc;
}

void BoundarySpec::validate(int dim) const {
    for (int axis = 0; axis < dim; ++axis) {
        for (int side = 0; side < 2; ++side) {
            const auto& segs = sides[axis][side].segments;
            if (segs.empty()) {
                throw std::invalid_argument("boundary: side without segments on axis " +
                                            std::to_string(axis));
            }
            for (std::size_t k = 0; k < segs.size(); ++k) {
                if (k > 0 && segs[k].start < segs[k - 1].start) {
                    throw std::invalid_argument("boundary: segments must be sorted by start");
                }
                if (segs[k].kind == BoundaryKind::dirichlet && !segs[k].fn) {
                    throw std::invalid_argument("boundary: dirichlet segment needs a function");
                }
                if (segs[k].kind == BoundaryKind::periodic && segs.size() != 1) {
                    throw std::invalid_argument("boundary: periodic cannot be mixed with others");
                }
            }
        }
        if (sides[axis][0].is_periodic() != sides[axis][1].is_periodic()) {
            throw std::invalid_argument("boundary: periodic must be paired on axis " +
                                        std::to_string(axis));
        }
    }
}

namespace {

// Fills the ghost cells of one side. `line` indexes cells along the
// boundary normal: line(k) for k in [-kGhost, m + kGhost).
void fill_side(ConservedField& field, const BoundarySide& side, int axis, int hi_side, int across,
               double t) {
    const Grid& g = field.grid();
    const int m = g.cells[axis];
    const int other = 1 - axis;
    const double s = g.dim == 2 ? g.center(other, across) : 0.0;
    const BoundarySegment& seg = side.at(s);
    const EosParams eos = field.eos();

    auto cell = [&](int k) { return axis == 0 ? g.index(k, across) : g.index(across, k); };
    const int normal_mom = axis == 0 ? kMomX : kMomY;

    for (int layer = 0; layer < kGhost; ++layer) {
        const int ghost = hi_side ? m + layer : -1 - layer;
        int src = 0;
        switch (seg.kind) {
        case BoundaryKind::periodic: src = hi_side ? layer : m - 1 - layer; break;
        case BoundaryKind::zero_gradient: src = hi_side ? m - 1 : 0; break;
        case BoundaryKind::reflective_wall: src = hi_side ? m - 1 - layer : layer; break;
        case BoundaryKind::dirichlet: break;
        }
        const std::size_t gk = cell(ghost);
        if (seg.kind == BoundaryKind::dirichlet) {
            const double xg = axis == 0 ? g.center(0, ghost) : g.center(0, across);
            const double yg = g.dim == 2 ? (axis == 1 ? g.center(1, ghost) : g.center(1, across))
                                         : 0.0;
            const ConservedState u = prim_to_cons(seg.fn(xg, yg, t), eos);
            field.data(kRho)[gk] = u.rho;
            field.data(kMomX)[gk] = u.mom[0];
            if (g.dim == 2) field.data(kMomY)[gk] = u.mom[1];
            field.data(kEnergy)[gk] = u.E;
            continue;
        }
        const std::size_t sk = cell(src);
        for (int v : active_vars(g.dim)) field.data(v)[gk] = field.data(v)[sk];
        if (seg.kind == BoundaryKind::reflective_wall) {
            field.data(normal_mom)[gk] = -field.data(normal_mom)[gk];
        }
    }
}

} // namespace

void apply_boundary(ConservedField& field, const BoundarySpec& bc, double t) {
    const Grid& g = field.grid();
    for (int j = 0; j < g.ny(); ++j) {
        fill_side(field, bc.sides[0][0], 0, 0, j, t);
        fill_side(field, bc.sides[0][1], 0, 1, j, t);
    }
    if (g.dim == 2) {
        for (int i = -kGhost; i < g.nx() + kGhost; ++i) {
            fill_side(field, bc.sides[1][0], 1, 0, i, t);
            fill_side(field, bc.sides[1][1], 1, 1, i, t);
        }
    }
}

} // namespace igrfv
