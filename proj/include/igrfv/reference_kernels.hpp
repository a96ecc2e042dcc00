#pragma once

// Straightforward single-threaded versions of the hot kernels, written
// directly from the discrete equations. They exist to check the optimized
// OpenMP kernels and as the baseline of the benchmark.

#include "igrfv/field.hpp"
#include "igrfv/igr.hpp"
#include "igrfv/integrate.hpp"

#include <span>
#include <vector>

namespace igrfv::reference {

// Jacobi update evaluated neighbor by neighbor from the update formula.
std::vector<double> jacobi_sweep(const EllipticLayout& layout, std::span<const double> rho,
                                 std::span<const double> source, std::span<const double> sigma,
                                 double alpha);

// dU/dt for a field whose ghosts are already filled, built from the public
// per-face functions (reconstruct_pair, rusanov_flux / hllc_flux) and
// lad_terms. `sigma_padded` is Sigma on the padded layout, or empty.
ConservedField semi_discrete_rhs(const ConservedField& u, const SchemeConfig& cfg,
                                 std::span<const double> sigma_padded);

} // namespace igrfv::reference
