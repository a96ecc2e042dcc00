#pragma once

#include "igrfv/boundary.hpp"
#include "igrfv/exec.hpp"
#include "igrfv/field.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace igrfv {

// jacobi: warm-started sweeps (any dimension). direct: exact tridiagonal
// elimination of the 1D system, for studies where alpha >> Delta^2.
enum class SigmaSolver { jacobi, direct };

struct IgrParams {
    double alpha = 0.0;
    SigmaSolver solver = SigmaSolver::jacobi;
    int max_sweeps = 50;
    double rel_tol = 1e-6;
    // Sweep budget for a cold start (no previous solution to warm from).
    int cold_sweeps = 2000;
};

// Interior-only cell layout of the elliptic problem; x fastest. Unlike Grid
// it allows any positive cell count. Non-periodic axes use the Neumann rule:
// neighbors outside the domain drop out of both sums.
struct EllipticLayout {
    int dim = 1;
    int nx = 1;
    int ny = 1;
    double dx = 1.0;
    double dy = 1.0;
    bool periodic_x = false;
    bool periodic_y = false;

    static EllipticLayout of(const Grid& grid, const BoundarySpec& bc);
    std::size_t size() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    }
};

// Row-major 2x2 velocity gradient, J[a][b] = d u_a / d x_b. 1D uses J[0][0].
using VelocityGradient = std::array<std::array<double, 2>, 2>;

// Central-difference velocity gradient of interior cell (i, j); ghosts must be filled.
VelocityGradient velocity_jacobian(const ConservedField& field, int i, int j = 0);

// alpha * (tr(J)^2 + tr(J^2)).
double igr_source(const VelocityGradient& jac, int dim, double alpha);

// igr_source over every interior cell, in EllipticLayout order.
void igr_source_field(const ConservedField& field, double alpha, std::span<double> out,
                      Exec exec = Exec::parallel);

// Precomputed Jacobi stencil for fixed density: off-diagonal weights
// alpha * 2 / (Delta^2 (rho_nbr + rho_ctr)) per direction (0 when the
// neighbor is dropped) and the diagonal 1/rho + sum of weights.
class EllipticOperator {
public:
    EllipticOperator(const EllipticLayout& layout, std::span<const double> rho, double alpha);

    const EllipticLayout& layout() const { return layout_; }
    double alpha() const { return alpha_; }

    // Recomputes the weights for a new density and alpha, reusing storage.
    void rebuild(std::span<const double> rho, double alpha);

    // One simultaneous Jacobi update from `old_sigma` into `new_sigma`.
    // Returns max_i |diag_i (new_i - old_i)|, which equals the max-norm
    // residual of `old_sigma`.
    double sweep(std::span<const double> source, std::span<const double> old_sigma,
                 std::span<double> new_sigma, Exec exec = Exec::parallel) const;

private:
    EllipticLayout layout_;
    double alpha_;
    std::vector<double> diag_;
    std::vector<double> inv_diag_;
    std::vector<double> w_xm_, w_xp_, w_ym_, w_yp_;
    std::vector<int> xm_, xp_;  // neighbor column for each i (wrap or clamp)
    std::vector<int> ym_, yp_;  // neighbor row for each j
};

// Relative residual of the discrete elliptic equation,
// max|lhs - rhs| / max|rhs| with 0/0 -> 0. Evaluated straight from the
// equation, independent of the sweep code.
double elliptic_residual(const EllipticLayout& layout, std::span<const double> rho,
                         std::span<const double> source, std::span<const double> sigma,
                         double alpha);

// Exact solution of the 1D discrete elliptic equation (Thomas algorithm;
// Sherman-Morrison correction when periodic). Throws for 2D layouts.
std::vector<double> solve_elliptic_1d(const EllipticLayout& layout, std::span<const double> rho,
                                      std::span<const double> source, double alpha);

// Entropic pressure on the interior cells plus the last solve's diagnostics.
struct SigmaField {
    EllipticLayout layout;
    std::vector<double> values;
    bool warm = false;
    int last_sweeps = 0;
    double last_residual = 0.0;

    // Reused between solves.
    struct Workspace {
        std::vector<double> source, rho, next;
        std::optional<EllipticOperator> op;
    };
    Workspace work;
};

SigmaField make_sigma_field(const Grid& grid, const BoundarySpec& bc);

// One Jacobi iterate of the discrete elliptic equation.
std::vector<double> jacobi_sweep(const EllipticLayout& layout, std::span<const double> rho,
                                 std::span<const double> source, std::span<const double> sigma,
                                 double alpha, Exec exec = Exec::parallel);

// Runs Jacobi sweeps from `sigma` (warm start when sigma.warm, cold budget
// otherwise) until the relative residual is <= rel_tol or the budget is
// spent; SigmaSolver::direct solves the 1D system exactly instead.
// alpha == 0 yields Sigma == 0. Field ghosts must be filled.
void solve_sigma(const ConservedField& field, const IgrParams& params, SigmaField& sigma,
                 Exec exec = Exec::parallel);

// Writes Sigma into a padded array laid out like `grid`: interior values,
// then ghosts by periodic wrap or by mirroring the interior.
void fill_sigma_padded(const Grid& grid, const SigmaField& sigma, std::span<double> padded);

} // namespace igrfv
