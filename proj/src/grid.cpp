#include "igrfv/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace igrfv {

namespace {

void check_axis(double x0, double x1, int m, const char* name) {
    if (!(x1 > x0)) {
        throw std::invalid_argument(std::string("grid: empty extent on axis ") + name);
    }
    if (m < 2 * kGhost) {
        throw std::invalid_argument(std::string("grid: axis ") + name + " needs at least " +
                                    std::to_string(2 * kGhost) + " cells, got " +
                                    std::to_string(m));
    }
}

} // namespace

Grid Grid::line(double x0, double x1, int m) {
    check_axis(x0, x1, m, "x");
    Grid g;
    g.dim = 1;
    g.lo = {x0, 0.0};
    g.hi = {x1, 0.0};
    g.cells = {m, 1};
    g.spacing = {(x1 - x0) / m, 1.0};
    return g;
}

Grid Grid::rect(double x0, double x1, int mx, double y0, double y1, int my) {
    check_axis(x0, x1, mx, "x");
    check_axis(y0, y1, my, "y");
    Grid g;
    g.dim = 2;
    g.lo = {x0, y0};
    g.hi = {x1, y1};
    g.cells = {mx, my};
    g.spacing = {(x1 - x0) / mx, (y1 - y0) / my};
    return g;
}

double Grid::max_spacing() const {
    return dim == 2 ? std::max(spacing[0], spacing[1]) : spacing[0];
}

bool same_layout(const Grid& a, const Grid& b) {
    if (a.dim != b.dim) return false;
    for (int axis = 0; axis < a.dim; ++axis) {
        if (a.cells[axis] != b.cells[axis] || a.lo[axis] != b.lo[axis] ||
            a.hi[axis] != b.hi[axis]) {
            return false;
        }
    }
    return true;
}

} // namespace igrfv
