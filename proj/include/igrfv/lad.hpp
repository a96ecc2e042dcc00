#pragma once

#include "igrfv/field.hpp"

#include <vector>

namespace igrfv {

struct LadParams {
    double coeff = 2.0;
    int smoothing_passes = 1;
};

// Bulk-viscosity coefficient on cells -1 .. m (one ghost layer each side),
// zeta[k] belonging to cell k-1.
struct LadCoefficient {
    std::vector<double> zeta;
    double at(int i) const { return zeta[static_cast<std::size_t>(i + 1)]; }
};

// zeta_i = coeff * dx^2 * G[rho_i max(0, -du/dx_i)], G being
// `smoothing_passes` applications of the (1/4, 1/2, 1/4) kernel. 1D only;
// ghosts must be filled.
LadCoefficient lad_coefficient(const ConservedField& field, const LadParams& params);

struct LadTerms {
    std::vector<double> momentum;  // interior cells
    std::vector<double> energy;
};

// Momentum: (D_{i+1/2} - D_{i-1/2}) / dx with D = zeta_face (u_{i+1} - u_i) / dx.
// Energy: the momentum term times u_i.
LadTerms lad_terms(const ConservedField& field, const LadCoefficient& zeta);

} // namespace igrfv
