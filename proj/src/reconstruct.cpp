#include "igrfv/reconstruct.hpp"

#include <stdexcept>
#include <string>

namespace igrfv {

std::string_view to_string(ReconstructionKind kind) {
    switch (kind) {
    case ReconstructionKind::linear1: return "linear1";
    case ReconstructionKind::linear3: return "linear3";
    case ReconstructionKind::linear5: return "linear5";
    case ReconstructionKind::weno5: return "weno5_component";
    }
    return "?";
}

ReconstructionKind reconstruction_from_string(std::string_view name) {
    if (name == "linear1") return ReconstructionKind::linear1;
    if (name == "linear3") return ReconstructionKind::linear3;
    if (name == "linear5") return ReconstructionKind::linear5;
    if (name == "weno5_component" || name == "weno5") return ReconstructionKind::weno5;
    throw std::invalid_argument("unknown reconstruction: " + std::string(name));
}

FacePair reconstruct_pair(std::span<const double, 6> stencil, ReconstructionKind kind) {
    const double* q = stencil.data() + 2;
    switch (kind) {
    case ReconstructionKind::linear1:
        return detail::reconstruct_at<ReconstructionKind::linear1>(q, 1);
    case ReconstructionKind::linear3:
        return detail::reconstruct_at<ReconstructionKind::linear3>(q, 1);
    case ReconstructionKind::linear5:
        return detail::reconstruct_at<ReconstructionKind::linear5>(q, 1);
    case ReconstructionKind::weno5:
        return detail::reconstruct_at<ReconstructionKind::weno5>(q, 1);
    }
    return {};
}

FaceLayout FaceLayout::of(const Grid& grid, int axis) {
    FaceLayout f;
    f.axis = axis;
    f.width = grid.nx() + (axis == 0 ? 1 : 0);
    f.height = grid.ny() + (axis == 1 ? 1 : 0);
    return f;
}

FaceStates reconstruct_field(const ConservedField& field, int axis, ReconstructionKind kind) {
    const Grid& g = field.grid();
    FaceStates out;
    out.layout = FaceLayout::of(g, axis);
    const std::ptrdiff_t s = g.stride(axis);
    for (int v : active_vars(g.dim)) {
        out.left[v].resize(out.layout.size());
        out.right[v].resize(out.layout.size());
        const double* q = field.data(v);
        for (int fj = 0; fj < out.layout.height; ++fj) {
            for (int fi = 0; fi < out.layout.width; ++fi) {
                // Face (fi, fj) sits on the high side of the cell one step back along axis.
                const std::size_t c = axis == 0 ? g.index(fi - 1, fj) : g.index(fi, fj - 1);
                const double* p = q + c;
                const double st[6] = {p[-2 * s], p[-s], p[0], p[s], p[2 * s], p[3 * s]};
                const FacePair lr = reconstruct_pair(std::span<const double, 6>(st), kind);
                out.left[v][out.layout.index(fi, fj)] = lr.left;
                out.right[v][out.layout.index(fi, fj)] = lr.right;
            }
        }
    }
    return out;
}

} // namespace igrfv
