#pragma once

#include <array>
#include <cstddef>

namespace igrfv {

// Halo width shared by every field. Five-point reconstructions need three
// cells beyond each face; the central stencils need one.
inline constexpr int kGhost = 3;

// Uniform Cartesian grid in one or two dimensions. Cell (i, j) with
// 0 <= i < cells[0] is interior; padded storage adds kGhost cells per side.
struct Grid {
    int dim = 1;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{1.0, 0.0};
    std::array<int, 2> cells{1, 1};
    std::array<double, 2> spacing{1.0, 1.0};

    static Grid line(double x0, double x1, int m);
    static Grid rect(double x0, double x1, int mx, double y0, double y1, int my);

    int nx() const { return cells[0]; }
    int ny() const { return dim == 2 ? cells[1] : 1; }
    int padded_nx() const { return cells[0] + 2 * kGhost; }
    int padded_ny() const { return dim == 2 ? cells[1] + 2 * kGhost : 1; }
    std::size_t interior_count() const {
        return static_cast<std::size_t>(nx()) * static_cast<std::size_t>(ny());
    }
    std::size_t padded_count() const {
        return static_cast<std::size_t>(padded_nx()) * static_cast<std::size_t>(padded_ny());
    }

    // Padded linear index of cell (i, j); ghosts have i < 0 or i >= nx().
    std::size_t index(int i, int j = 0) const {
        const int jj = dim == 2 ? j + kGhost : 0;
        return static_cast<std::size_t>(jj) * static_cast<std::size_t>(padded_nx()) +
               static_cast<std::size_t>(i + kGhost);
    }
    std::ptrdiff_t stride(int axis) const { return axis == 0 ? 1 : padded_nx(); }

    double center(int axis, int i) const { return lo[axis] + (i + 0.5) * spacing[axis]; }
    double cell_volume() const { return dim == 2 ? spacing[0] * spacing[1] : spacing[0]; }
    double max_spacing() const;
    double length(int axis) const { return hi[axis] - lo[axis]; }
};

bool same_layout(const Grid& a, const Grid& b);

} // namespace igrfv
