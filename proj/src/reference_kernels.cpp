#include "igrfv/reference_kernels.hpp"

#include "igrfv/flux.hpp"
#include "igrfv/lad.hpp"
#include "igrfv/reconstruct.hpp"

#include <array>
#include <stdexcept>

namespace igrfv::reference {

std::vector<double> jacobi_sweep(const EllipticLayout& layout, std::span<const double> rho,
                                 std::span<const double> source, std::span<const double> sigma,
                                 double alpha) {
    const int nx = layout.nx;
    const int ny = layout.dim == 2 ? layout.ny : 1;
    std::vector<double> out(layout.size());
    auto idx = [nx](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t c = idx(i, j);
            double num = source[c];
            double den = 1.0 / rho[c];
            auto neighbor = [&](int ni, int nj, double delta) {
                if (ni < 0 || ni >= nx) {
                    if (!layout.periodic_x) return;
                    ni = (ni + nx) % nx;
                }
                if (nj < 0 || nj >= ny) {
                    if (!layout.periodic_y) return;
                    nj = (nj + ny) % ny;
                }
                const std::size_t n = idx(ni, nj);
                const double w = alpha * 2.0 / (delta * delta * (rho[n] + rho[c]));
                num += w * sigma[n];
                den += w;
            };
            neighbor(i - 1, j, layout.dx);
            neighbor(i + 1, j, layout.dx);
            if (layout.dim == 2) {
                neighbor(i, j - 1, layout.dy);
                neighbor(i, j + 1, layout.dy);
            }
            out[c] = num / den;
        }
    }
    return out;
}

ConservedField semi_discrete_rhs(const ConservedField& u, const SchemeConfig& cfg,
                                 std::span<const double> sigma_padded) {
    const Grid& g = u.grid();
    const EosParams eos = u.eos();
    ConservedField rhs(g, u.gamma());
    const bool with_sigma = !sigma_padded.empty();

    for (int axis = 0; axis < g.dim; ++axis) {
        const int di = axis == 0 ? 1 : 0;
        const int dj = axis == 1 ? 1 : 0;
        const double inv = 1.0 / g.spacing[axis];
        // Flux through the face between cell (i, j) and its +axis neighbor.
        auto face_flux = [&](int i, int j) {
            ConservedState l;
            ConservedState r;
            for (int v : active_vars(g.dim)) {
                std::array<double, 6> q{};
                for (int k = 0; k < 6; ++k) q[k] = u.at(v, i + (k - 2) * di, j + (k - 2) * dj);
                const FacePair p = reconstruct_pair(std::span<const double, 6>(q), cfg.recon);
                double* lv = v == kRho ? &l.rho : v == kEnergy ? &l.E : &l.mom[v - kMomX];
                double* rv = v == kRho ? &r.rho : v == kEnergy ? &r.E : &r.mom[v - kMomX];
                *lv = p.left;
                *rv = p.right;
            }
            if (g.dim == 1) {
                l.mom[1] = 0.0;
                r.mom[1] = 0.0;
            }
            double sf = 0.0;
            if (with_sigma) {
                sf = 0.5 * (sigma_padded[g.index(i, j)] + sigma_padded[g.index(i + di, j + dj)]);
            }
            if (cfg.flux == FluxKind::rusanov) return rusanov_flux(l, r, sf, axis, eos);
            FluxVector f = hllc_flux(l, r, axis, eos);
            f[axis == 0 ? kMomX : kMomY] += sf;
            f[kEnergy] += sf * 0.5 * (l.mom[axis] / l.rho + r.mom[axis] / r.rho);
            return f;
        };
        for (int j = 0; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                const FluxVector hi = face_flux(i, j);
                const FluxVector lo = face_flux(i - di, j - dj);
                for (int v : active_vars(g.dim)) rhs.at(v, i, j) -= (hi[v] - lo[v]) * inv;
            }
        }
    }

    if (cfg.scheme == Scheme::lad) {
        const LadTerms terms = lad_terms(u, lad_coefficient(u, cfg.lad));
        for (int i = 0; i < g.nx(); ++i) {
            rhs.at(kMomX, i) += terms.momentum[static_cast<std::size_t>(i)];
            rhs.at(kEnergy, i) += terms.energy[static_cast<std::size_t>(i)];
        }
    }
    return rhs;
}

} // namespace igrfv::reference
