#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>

namespace igrfv {

enum class ReconstructionKind { linear1, linear3, linear5, weno5 };

std::string_view to_string(ReconstructionKind kind);
ReconstructionKind reconstruction_from_string(std::string_view name);

struct FacePair {
    double left = 0.0;
    double right = 0.0;
};

inline constexpr double kWenoEps = 1e-6;

namespace detail {

// Face values at i+1/2 from cell averages q[k*s], q pointing at cell i.
// `left` uses cells i-2..i+2 and `right` the mirror image i-1..i+3.

inline double linear5_left(double qm2, double qm1, double q0, double qp1, double qp2) {
    return (2.0 * qm2 - 13.0 * qm1 + 47.0 * q0 + 27.0 * qp1 - 3.0 * qp2) / 60.0;
}

inline double linear3_left(double qm1, double q0, double qp1) {
    return (-qm1 + 5.0 * q0 + 2.0 * qp1) / 6.0;
}

inline double weno5_left(double qm2, double qm1, double q0, double qp1, double qp2) {
    const double p0 = (2.0 * qm2 - 7.0 * qm1 + 11.0 * q0) / 6.0;
    const double p1 = (-qm1 + 5.0 * q0 + 2.0 * qp1) / 6.0;
    const double p2 = (2.0 * q0 + 5.0 * qp1 - qp2) / 6.0;

    const double a0 = qm2 - 2.0 * qm1 + q0;
    const double b0 = qm2 - 4.0 * qm1 + 3.0 * q0;
    const double a1 = qm1 - 2.0 * q0 + qp1;
    const double b1 = qm1 - qp1;
    const double a2 = q0 - 2.0 * qp1 + qp2;
    const double b2 = 3.0 * q0 - 4.0 * qp1 + qp2;
    const double beta0 = 13.0 / 12.0 * a0 * a0 + 0.25 * b0 * b0;
    const double beta1 = 13.0 / 12.0 * a1 * a1 + 0.25 * b1 * b1;
    const double beta2 = 13.0 / 12.0 * a2 * a2 + 0.25 * b2 * b2;

    const double w0 = 0.1 / ((kWenoEps + beta0) * (kWenoEps + beta0));
    const double w1 = 0.6 / ((kWenoEps + beta1) * (kWenoEps + beta1));
    const double w2 = 0.3 / ((kWenoEps + beta2) * (kWenoEps + beta2));
    return (w0 * p0 + w1 * p1 + w2 * p2) / (w0 + w1 + w2);
}

template <ReconstructionKind K>
inline FacePair reconstruct_at(const double* q, std::ptrdiff_t s) {
    if constexpr (K == ReconstructionKind::linear1) {
        return {q[0], q[s]};
    } else if constexpr (K == ReconstructionKind::linear3) {
        return {linear3_left(q[-s], q[0], q[s]), linear3_left(q[2 * s], q[s], q[0])};
    } else if constexpr (K == ReconstructionKind::linear5) {
        return {linear5_left(q[-2 * s], q[-s], q[0], q[s], q[2 * s]),
                linear5_left(q[3 * s], q[2 * s], q[s], q[0], q[-s])};
    } else {
        return {weno5_left(q[-2 * s], q[-s], q[0], q[s], q[2 * s]),
                weno5_left(q[3 * s], q[2 * s], q[s], q[0], q[-s])};
    }
}

} // namespace detail

// Interface pair at i+1/2 from the six averages q_{i-2} .. q_{i+3}.
FacePair reconstruct_pair(std::span<const double, 6> stencil, ReconstructionKind kind);

} // namespace igrfv

#include "igrfv/field.hpp"

#include <vector>

namespace igrfv {

// Face-centered storage for one axis, row-major with x fastest. Face (fi, fj)
// on axis 0 is the low-x face of cell (fi, fj); on axis 1 the low-y face.
struct FaceLayout {
    int axis = 0;
    int width = 0;   // faces per row along x
    int height = 0;  // rows along y

    static FaceLayout of(const Grid& grid, int axis);
    std::size_t size() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }
    std::size_t index(int fi, int fj = 0) const {
        return static_cast<std::size_t>(fj) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(fi);
    }
};

struct FaceStates {
    FaceLayout layout;
    std::array<std::vector<double>, kMaxVars> left;
    std::array<std::vector<double>, kMaxVars> right;
};

// Component-wise reconstruction of every interior face (domain-boundary faces
// included) along `axis`. Ghost cells must be filled.
FaceStates reconstruct_field(const ConservedField& field, int axis, ReconstructionKind kind);

} // namespace igrfv
