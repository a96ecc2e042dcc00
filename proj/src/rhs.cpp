#include "igrfv/errors.hpp"
#include "igrfv/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace igrfv {

namespace {

struct KernelArgs {
    const ConservedField* u;
    const double* sigma;  // padded; zeros without IGR
    int axis;
    FaceLayout layout;
    std::array<std::vector<double>, kMaxVars>* out;
    Exec exec;
};

// Fills the face fluxes of one axis. Returns the smallest face density or
// pressure seen (<= 0 signals a non-physical reconstruction).
template <ReconstructionKind K, FluxKind F, bool TwoD>
double face_kernel(const KernelArgs& a) {
    const ConservedField& u = *a.u;
    const Grid& g = u.grid();
    const double gamma = u.gamma();
    const int axis = a.axis;
    const std::ptrdiff_t s = g.stride(axis);
    const double* rho = u.data(kRho);
    const double* mn = u.data(axis == 0 ? kMomX : kMomY);
    const double* mt = TwoD ? u.data(axis == 0 ? kMomY : kMomX) : nullptr;
    const double* en = u.data(kEnergy);
    const double* sig = a.sigma;
    const int width = a.layout.width;
    const int height = a.layout.height;

    double* f_rho = (*a.out)[kRho].data();
    double* f_mn = (*a.out)[axis == 0 ? kMomX : kMomY].data();
    double* f_mt = TwoD ? (*a.out)[axis == 0 ? kMomY : kMomX].data() : nullptr;
    double* f_en = (*a.out)[kEnergy].data();

    constexpr int kChunk = 2048;
    const int chunks = (width + kChunk - 1) / kChunk;
    const int tasks = height * chunks;
    double worst = std::numeric_limits<double>::infinity();

#pragma omp parallel for schedule(static) reduction(min : worst) if (a.exec == Exec::parallel)
    for (int task = 0; task < tasks; ++task) {
        const int fj = task / chunks;
        const int f0 = (task % chunks) * kChunk;
        const int f1 = std::min(width, f0 + kChunk);
        // Left cell of face (f0, fj) along the axis.
        const std::size_t c0 = axis == 0 ? g.index(f0 - 1, fj) : g.index(f0, fj - 1);
        const std::size_t o0 = a.layout.index(f0, fj);
        double local = std::numeric_limits<double>::infinity();
#pragma omp simd reduction(min : local)
        for (int f = f0; f < f1; ++f) {
            const std::size_t c = c0 + static_cast<std::size_t>(f - f0);
            const std::size_t o = o0 + static_cast<std::size_t>(f - f0);
            const FacePair r = detail::reconstruct_at<K>(rho + c, s);
            const FacePair n = detail::reconstruct_at<K>(mn + c, s);
            const FacePair e = detail::reconstruct_at<K>(en + c, s);
            FacePair t{0.0, 0.0};
            if constexpr (TwoD) t = detail::reconstruct_at<K>(mt + c, s);

            const detail::FaceState l{r.left, n.left, t.left, e.left};
            const detail::FaceState rr{r.right, n.right, t.right, e.right};
            const detail::FacePrimitive wl = detail::face_primitive(l, gamma);
            const detail::FacePrimitive wr = detail::face_primitive(rr, gamma);
            local = std::min(local, std::min(std::min(l.rho, rr.rho), std::min(wl.p, wr.p)));

            const double sf = 0.5 * (sig[c] + sig[c + s]);
            detail::FaceFlux flux;
            if constexpr (F == FluxKind::rusanov) {
                flux = detail::rusanov(l, wl, rr, wr, sf);
            } else {
                flux = detail::hllc(l, wl, rr, wr, gamma);
                flux.mn += sf;
                flux.E += sf * 0.5 * (wl.un + wr.un);
            }
            f_rho[o] = flux.rho;
            f_mn[o] = flux.mn;
            if constexpr (TwoD) f_mt[o] = flux.mt;
            f_en[o] = flux.E;
        }
        worst = std::min(worst, local);
    }
    return worst;
}

template <ReconstructionKind K, FluxKind F>
double dispatch_dim(const KernelArgs& a) {
    return a.u->dim() == 2 ? face_kernel<K, F, true>(a) : face_kernel<K, F, false>(a);
}

template <ReconstructionKind K>
double dispatch_flux(const KernelArgs& a, FluxKind flux) {
    return flux == FluxKind::rusanov ? dispatch_dim<K, FluxKind::rusanov>(a)
                                     : dispatch_dim<K, FluxKind::hllc>(a);
}

double dispatch(const KernelArgs& a, ReconstructionKind recon, FluxKind flux) {
    switch (recon) {
    case ReconstructionKind::linear1: return dispatch_flux<ReconstructionKind::linear1>(a, flux);
    case ReconstructionKind::linear3: return dispatch_flux<ReconstructionKind::linear3>(a, flux);
    case ReconstructionKind::linear5: return dispatch_flux<ReconstructionKind::linear5>(a, flux);
    case ReconstructionKind::weno5: return dispatch_flux<ReconstructionKind::weno5>(a, flux);
    }
    return 0.0;
}

// Serial re-scan to name the first face with a non-physical reconstruction.
[[noreturn]] void report_bad_face(const ConservedField& u, int axis, ReconstructionKind recon) {
    const FaceStates fs = reconstruct_field(u, axis, recon);
    const double gm1 = u.gamma() - 1.0;
    for (int fj = 0; fj < fs.layout.height; ++fj) {
        for (int fi = 0; fi < fs.layout.width; ++fi) {
            const std::size_t o = fs.layout.index(fi, fj);
            for (const auto* side : {&fs.left, &fs.right}) {
                const double rho = (*side)[kRho][o];
                double m2 = (*side)[kMomX][o] * (*side)[kMomX][o];
                if (u.dim() == 2) m2 += (*side)[kMomY][o] * (*side)[kMomY][o];
                const double p = gm1 * ((*side)[kEnergy][o] - 0.5 * m2 / rho);
                if (!(rho > 0.0) || !(p > 0.0)) {
                    const int ci = axis == 0 ? fi - 1 : fi;
                    const int cj = axis == 1 ? fj - 1 : fj;
                    throw NonPhysicalState("non-physical reconstructed face state", ci, cj, rho, p);
                }
            }
        }
    }
    throw NonPhysicalState("non-physical reconstructed face state", -1, -1, 0.0, 0.0);
}

} // namespace

RhsEvaluator::RhsEvaluator(const Grid& grid, const SchemeConfig& cfg, BoundarySpec bc, Exec exec)
    : cfg_(cfg), bc_(std::move(bc)), exec_(exec) {
    cfg_.validate(grid.dim);
    bc_.validate(grid.dim);
    alpha_ = cfg_.scheme == Scheme::igr ? cfg_.resolved_alpha(grid) : 0.0;
    sigma_ = make_sigma_field(grid, bc_);
    sigma_padded_.assign(grid.padded_count(), 0.0);
    for (int axis = 0; axis < grid.dim; ++axis) {
        layouts_[axis] = FaceLayout::of(grid, axis);
        for (int v : active_vars(grid.dim)) fluxes_[axis][v].assign(layouts_[axis].size(), 0.0);
    }
}

void RhsEvaluator::face_fluxes(const ConservedField& u, int axis) {
    KernelArgs args{&u, sigma_padded_.data(), axis,
                    layouts_[axis], &fluxes_[axis], exec_};
    const double worst = dispatch(args, cfg_.recon, cfg_.flux);
    if (!(worst > 0.0)) report_bad_face(u, axis, cfg_.recon);
}

void RhsEvaluator::accumulate(const ConservedField& u, ConservedField& rhs) const {
    const Grid& g = u.grid();
    const int nx = g.nx();
    const int ny = g.ny();
    const double inv_dx = 1.0 / g.spacing[0];
    const double inv_dy = g.dim == 2 ? 1.0 / g.spacing[1] : 0.0;
    const FaceLayout& lx = layouts_[0];
    const FaceLayout& ly = layouts_[1];
    for (int v : active_vars(g.dim)) {
        const double* fx = fluxes_[0][v].data();
        const double* fy = g.dim == 2 ? fluxes_[1][v].data() : nullptr;
        double* out = rhs.data(v);
#pragma omp parallel for schedule(static) if (exec_ == Exec::parallel && ny > 1)
        for (int j = 0; j < ny; ++j) {
            double* o = out + g.index(0, j);
            const double* fxr = fx + lx.index(0, j);
            if (fy) {
                const double* fys = fy + ly.index(0, j);
                const double* fyn = fy + ly.index(0, j + 1);
                for (int i = 0; i < nx; ++i) {
                    o[i] = -(fxr[i + 1] - fxr[i]) * inv_dx - (fyn[i] - fys[i]) * inv_dy;
                }
            } else {
                for (int i = 0; i < nx; ++i) o[i] = -(fxr[i + 1] - fxr[i]) * inv_dx;
            }
        }
    }
}

void RhsEvaluator::evaluate(ConservedField& u, double t, ConservedField& rhs) {
    const Grid& g = u.grid();
    apply_boundary(u, bc_, t);
    if (cfg_.scheme == Scheme::igr) {
        IgrParams params = cfg_.igr;
        params.alpha = alpha_;
        solve_sigma(u, params, sigma_, exec_);
        fill_sigma_padded(g, sigma_, sigma_padded_);
    }
    for (int axis = 0; axis < g.dim; ++axis) face_fluxes(u, axis);
    accumulate(u, rhs);
    if (cfg_.scheme == Scheme::lad) {
        const LadTerms terms = lad_terms(u, lad_coefficient(u, cfg_.lad));
        double* mx = rhs.data(kMomX);
        double* en = rhs.data(kEnergy);
        for (int i = 0; i < g.nx(); ++i) {
            mx[g.index(i)] += terms.momentum[static_cast<std::size_t>(i)];
            en[g.index(i)] += terms.energy[static_cast<std::size_t>(i)];
        }
    }
}

ConservedField semi_discrete_rhs(const ConservedField& u, const SchemeConfig& cfg,
                                 const BoundarySpec& bc, double t, Exec exec) {
    ConservedField work = u;
    ConservedField rhs(u.grid(), u.gamma());
    RhsEvaluator op(u.grid(), cfg, bc, exec);
    op.evaluate(work, t, rhs);
    return rhs;
}

} // namespace igrfv
