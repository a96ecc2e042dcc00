#include "igrfv/igr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace igrfv {

EllipticLayout EllipticLayout::of(const Grid& grid, const BoundarySpec& bc) {
    EllipticLayout l;
    l.dim = grid.dim;
    l.nx = grid.nx();
    l.ny = grid.ny();
    l.dx = grid.spacing[0];
    l.dy = grid.dim == 2 ? grid.spacing[1] : 1.0;
    l.periodic_x = bc.periodic(0);
    l.periodic_y = grid.dim == 2 && bc.periodic(1);
    return l;
}

VelocityGradient velocity_jacobian(const ConservedField& field, int i, int j) {
    const Grid& g = field.grid();
    VelocityGradient jac{};
    const int nvel = g.dim;
    for (int b = 0; b < g.dim; ++b) {
        const int di = b == 0 ? 1 : 0;
        const int dj = b == 1 ? 1 : 0;
        const double inv = 1.0 / (2.0 * g.spacing[b]);
        for (int a = 0; a < nvel; ++a) {
            const int mv = a == 0 ? kMomX : kMomY;
            const double up = field.at(mv, i + di, j + dj) / field.at(kRho, i + di, j + dj);
            const double um = field.at(mv, i - di, j - dj) / field.at(kRho, i - di, j - dj);
            jac[a][b] = (up - um) * inv;
        }
    }
    return jac;
}

double igr_source(const VelocityGradient& jac, int dim, double alpha) {
    if (dim == 1) {
        const double s = jac[0][0];
        return alpha * (s * s + s * s);
    }
    const double tr = jac[0][0] + jac[1][1];
    const double tr_sq = jac[0][0] * jac[0][0] + 2.0 * jac[0][1] * jac[1][0] + jac[1][1] * jac[1][1];
    return alpha * (tr * tr + tr_sq);
}

void igr_source_field(const ConservedField& field, double alpha, std::span<double> out,
                      Exec exec) {
    const Grid& g = field.grid();
    const int nx = g.nx();
    const int ny = g.ny();
    if (out.size() != g.interior_count()) {
        throw std::invalid_argument("igr_source_field: output size mismatch");
    }
    const double* rho = field.data(kRho);
    const double* mx = field.data(kMomX);
    const double* my = g.dim == 2 ? field.data(kMomY) : nullptr;
    const double hx = 1.0 / (2.0 * g.spacing[0]);
    const double hy = g.dim == 2 ? 1.0 / (2.0 * g.spacing[1]) : 0.0;
    const std::ptrdiff_t sy = g.stride(1);

    if (g.dim == 1) {
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
        for (int i = 0; i < nx; ++i) {
            const std::size_t c = g.index(i);
            const double s = (mx[c + 1] / rho[c + 1] - mx[c - 1] / rho[c - 1]) * hx;
            out[static_cast<std::size_t>(i)] = alpha * (s * s + s * s);
        }
        return;
    }
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int j = 0; j < ny; ++j) {
        double* o = out.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(nx);
        for (int i = 0; i < nx; ++i) {
            const std::size_t c = g.index(i, j);
            const double uxx = (mx[c + 1] / rho[c + 1] - mx[c - 1] / rho[c - 1]) * hx;
            const double vxx = (my[c + 1] / rho[c + 1] - my[c - 1] / rho[c - 1]) * hx;
            const double uyy = (mx[c + sy] / rho[c + sy] - mx[c - sy] / rho[c - sy]) * hy;
            const double vyy = (my[c + sy] / rho[c + sy] - my[c - sy] / rho[c - sy]) * hy;
            const double tr = uxx + vyy;
            const double tr_sq = uxx * uxx + 2.0 * uyy * vxx + vyy * vyy;
            o[i] = alpha * (tr * tr + tr_sq);
        }
    }
}

EllipticOperator::EllipticOperator(const EllipticLayout& layout, std::span<const double> rho,
                                   double alpha)
    : layout_(layout), alpha_(alpha) {
    const int nx = layout.nx;
    const int ny = layout.dim == 2 ? layout.ny : 1;
    if (nx < 1 || ny < 1 || rho.size() != layout.size()) {
        throw std::invalid_argument("EllipticOperator: density does not match layout");
    }
    xm_.resize(static_cast<std::size_t>(nx));
    xp_.resize(static_cast<std::size_t>(nx));
    ym_.resize(static_cast<std::size_t>(ny));
    yp_.resize(static_cast<std::size_t>(ny));
    // Dropped (Neumann) neighbors point back at the cell itself with weight 0.
    for (int i = 0; i < nx; ++i) {
        xm_[i] = i > 0 ? i - 1 : (layout.periodic_x ? nx - 1 : -1);
        xp_[i] = i < nx - 1 ? i + 1 : (layout.periodic_x ? 0 : -1);
    }
    for (int j = 0; j < ny; ++j) {
        ym_[j] = j > 0 ? j - 1 : (layout.periodic_y ? ny - 1 : -1);
        yp_[j] = j < ny - 1 ? j + 1 : (layout.periodic_y ? 0 : -1);
    }

    for (int i = 0; i < nx; ++i) {
        if (xm_[i] < 0) xm_[i] = i;
        if (xp_[i] < 0) xp_[i] = i;
    }
    for (int j = 0; j < ny; ++j) {
        if (ym_[j] < 0) ym_[j] = j;
        if (yp_[j] < 0) yp_[j] = j;
    }
    rebuild(rho, alpha);
}

void EllipticOperator::rebuild(std::span<const double> rho, double alpha) {
    const int nx = layout_.nx;
    const int ny = layout_.dim == 2 ? layout_.ny : 1;
    if (rho.size() != layout_.size()) {
        throw std::invalid_argument("EllipticOperator: density does not match layout");
    }
    alpha_ = alpha;
    const std::size_t n = layout_.size();
    diag_.resize(n);
    inv_diag_.resize(n);
    w_xm_.resize(n);
    w_xp_.resize(n);
    if (layout_.dim == 2) {
        w_ym_.assign(n, 0.0);
        w_yp_.assign(n, 0.0);
    }
    const double cx = alpha * 2.0 / (layout_.dx * layout_.dx);
    const double cy = layout_.dim == 2 ? alpha * 2.0 / (layout_.dy * layout_.dy) : 0.0;
    // Each face weight is shared by the two cells it separates.
    for (int j = 0; j < ny; ++j) {
        const std::size_t row = static_cast<std::size_t>(j) * nx;
        const double* r = rho.data() + row;
        double* wp = w_xp_.data() + row;
        double* wm = w_xm_.data() + row;
#pragma omp simd
        for (int i = 0; i < nx - 1; ++i) wp[i] = cx / (r[i] + r[i + 1]);
        wp[nx - 1] = layout_.periodic_x && nx > 1 ? cx / (r[nx - 1] + r[0]) : 0.0;
        wm[0] = layout_.periodic_x && nx > 1 ? wp[nx - 1] : 0.0;
#pragma omp simd
        for (int i = 1; i < nx; ++i) wm[i] = wp[i - 1];
    }
    if (layout_.dim == 2) {
        for (int j = 0; j < ny; ++j) {
            const std::size_t row = static_cast<std::size_t>(j) * nx;
            const double* r = rho.data() + row;
            double* wn = w_yp_.data() + row;
            if (yp_[j] != j) {
                const double* rn = rho.data() + static_cast<std::size_t>(yp_[j]) * nx;
#pragma omp simd
                for (int i = 0; i < nx; ++i) wn[i] = cy / (r[i] + rn[i]);
            }
        }
        for (int j = 0; j < ny; ++j) {
            if (ym_[j] == j) continue;
            const double* src = w_yp_.data() + static_cast<std::size_t>(ym_[j]) * nx;
            std::copy(src, src + nx, w_ym_.data() + static_cast<std::size_t>(j) * nx);
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        double d = 1.0 / rho[c] + w_xm_[c] + w_xp_[c];
        if (layout_.dim == 2) d += w_ym_[c] + w_yp_[c];
        diag_[c] = d;
        inv_diag_[c] = 1.0 / d;
    }
}

double EllipticOperator::sweep(std::span<const double> source, std::span<const double> old_sigma,
                               std::span<double> new_sigma, Exec exec) const {
    const int nx = layout_.nx;
    const int ny = layout_.dim == 2 ? layout_.ny : 1;
    const bool two_d = layout_.dim == 2;
    // Rows are split into chunks so 1D problems still spread over threads.
    constexpr int kChunk = 2048;
    const int chunks_per_row = (nx + kChunk - 1) / kChunk;
    const int tasks = ny * chunks_per_row;

    const double* src = source.data();
    const double* old = old_sigma.data();
    double* out = new_sigma.data();
    double residual = 0.0;

#pragma omp parallel for schedule(static) reduction(max : residual) if (exec == Exec::parallel)
    for (int task = 0; task < tasks; ++task) {
        const int j = task / chunks_per_row;
        const int i0 = (task % chunks_per_row) * kChunk;
        const int i1 = std::min(nx, i0 + kChunk);
        const std::size_t row = static_cast<std::size_t>(j) * nx;
        const double* oc = old + row;
        const double* on = two_d ? old + static_cast<std::size_t>(yp_[j]) * nx : nullptr;
        const double* os = two_d ? old + static_cast<std::size_t>(ym_[j]) * nx : nullptr;
        const double* b = src + row;
        const double* wm = w_xm_.data() + row;
        const double* wp = w_xp_.data() + row;
        const double* wn = two_d ? w_yp_.data() + row : nullptr;
        const double* ws = two_d ? w_ym_.data() + row : nullptr;
        const double* d = diag_.data() + row;
        const double* inv = inv_diag_.data() + row;
        double* o = out + row;
        double r = 0.0;

        auto update = [&](int i, double west, double east) {
            double num = b[i] + wm[i] * west + wp[i] * east;
            if (two_d) num += ws[i] * os[i] + wn[i] * on[i];
            r = std::max(r, std::abs(num - d[i] * oc[i]));
            o[i] = num * inv[i];
        };

        const int lo = std::max(i0, 1);
        const int hi = std::min(i1, nx - 1);
        if (i0 == 0) update(0, oc[xm_[0]], oc[xp_[0]]);
        if (two_d) {
#pragma omp simd reduction(max : r)
            for (int i = lo; i < hi; ++i) {
                const double num =
                    b[i] + wm[i] * oc[i - 1] + wp[i] * oc[i + 1] + ws[i] * os[i] + wn[i] * on[i];
                r = std::max(r, std::abs(num - d[i] * oc[i]));
                o[i] = num * inv[i];
            }
        } else {
#pragma omp simd reduction(max : r)
            for (int i = lo; i < hi; ++i) {
                const double num = b[i] + wm[i] * oc[i - 1] + wp[i] * oc[i + 1];
                r = std::max(r, std::abs(num - d[i] * oc[i]));
                o[i] = num * inv[i];
            }
        }
        if (i1 == nx && nx > 1) update(nx - 1, oc[xm_[nx - 1]], oc[xp_[nx - 1]]);
        residual = std::max(residual, r);
    }
    return residual;
}

double elliptic_residual(const EllipticLayout& layout, std::span<const double> rho,
                         std::span<const double> source, std::span<const double> sigma,
                         double alpha) {
    const int nx = layout.nx;
    const int ny = layout.dim == 2 ? layout.ny : 1;
    auto at = [&](std::span<const double> a, int i, int j) {
        return a[static_cast<std::size_t>(j) * nx + i];
    };
    double worst = 0.0;
    double scale = 0.0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double s = at(sigma, i, j);
            const double r = at(rho, i, j);
            double lhs = s / r;
            // Each axis contributes sum over in-range neighbors of
            // 2 (S_c - S_n) / (d^2 (rho_n + rho_c)).
            for (int axis = 0; axis < layout.dim; ++axis) {
                const int n_axis = axis == 0 ? nx : ny;
                const bool periodic = axis == 0 ? layout.periodic_x : layout.periodic_y;
                const double d = axis == 0 ? layout.dx : layout.dy;
                for (int off : {-1, 1}) {
                    int k = (axis == 0 ? i : j) + off;
                    if (k < 0 || k >= n_axis) {
                        if (!periodic) continue;
                        k = (k + n_axis) % n_axis;
                    }
                    const int ni = axis == 0 ? k : i;
                    const int nj = axis == 0 ? j : k;
                    lhs += alpha * 2.0 * (s - at(sigma, ni, nj)) / (d * d * (at(rho, ni, nj) + r));
                }
            }
            worst = std::max(worst, std::abs(lhs - at(source, i, j)));
            scale = std::max(scale, std::abs(at(source, i, j)));
        }
    }
    if (scale == 0.0) return worst;
    return worst / scale;
}

SigmaField make_sigma_field(const Grid& grid, const BoundarySpec& bc) {
    SigmaField s;
    s.layout = EllipticLayout::of(grid, bc);
    s.values.assign(s.layout.size(), 0.0);
    return s;
}

std::vector<double> jacobi_sweep(const EllipticLayout& layout, std::span<const double> rho,
                                 std::span<const double> source, std::span<const double> sigma,
                                 double alpha, Exec exec) {
    const EllipticOperator op(layout, rho, alpha);
    std::vector<double> next(layout.size());
    op.sweep(source, sigma, next, exec);
    return next;
}

std::vector<double> solve_elliptic_1d(const EllipticLayout& layout, std::span<const double> rho,
                                      std::span<const double> source, double alpha) {
    if (layout.dim != 1) throw std::invalid_argument("solve_elliptic_1d: layout is not 1D");
    const int n = layout.nx;
    if (rho.size() != static_cast<std::size_t>(n) || source.size() != rho.size())
        throw std::invalid_argument("solve_elliptic_1d: size mismatch");
    const double cx = 2.0 * alpha / (layout.dx * layout.dx);
    const bool wrap = layout.periodic_x && n > 1;
    // w[i] couples i and i+1
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) w[i] = cx / (rho[i] + rho[i + 1]);
    if (wrap) w[n - 1] = cx / (rho[n - 1] + rho[0]);
    std::vector<double> lo(n), di(n), up(n);
    for (int i = 0; i < n; ++i) {
        const double wl = i > 0 ? w[i - 1] : (wrap ? w[n - 1] : 0.0);
        const double wr = i + 1 < n || wrap ? w[i] : 0.0;
        lo[i] = -wl;
        up[i] = -wr;
        di[i] = 1.0 / rho[i] + wl + wr;
    }
    auto thomas = [n](std::vector<double> a, std::vector<double> b, std::vector<double> c,
                      std::vector<double> d) {
        for (int i = 1; i < n; ++i) {
            const double f = a[i] / b[i - 1];
            b[i] -= f * c[i - 1];
            d[i] -= f * d[i - 1];
        }
        d[n - 1] /= b[n - 1];
        for (int i = n - 2; i >= 0; --i) d[i] = (d[i] - c[i] * d[i + 1]) / b[i];
        return d;
    };
    std::vector<double> rhs(source.begin(), source.end());
    if (!wrap || n < 3) {
        if (wrap) {
            // n == 2: both couplings hit the same neighbor
            up[0] += lo[0];
            lo[1] += up[1];
        }
        return thomas(lo, di, up, rhs);
    }
    // A = T + u v^T with corners A[0][n-1] = lo[0], A[n-1][0] = up[n-1].
    const double gamma = -di[0];
    const double corner_hi = lo[0];
    const double corner_lo = up[n - 1];
    std::vector<double> b = di;
    b[0] -= gamma;
    b[n - 1] -= corner_lo * corner_hi / gamma;
    const std::vector<double> x = thomas(lo, b, up, rhs);
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = corner_lo;
    const std::vector<double> z = thomas(lo, b, up, u);
    const double fact = (x[0] + corner_hi * x[n - 1] / gamma) / (1.0 + z[0] + corner_hi * z[n - 1] / gamma);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = x[i] - fact * z[i];
    return out;
}

void solve_sigma(const ConservedField& field, const IgrParams& params, SigmaField& sigma,
                 Exec exec) {
    const Grid& g = field.grid();
    if (sigma.values.size() != g.interior_count()) {
        throw std::invalid_argument("solve_sigma: sigma field does not match the grid");
    }
    if (params.alpha == 0.0) {
        std::fill(sigma.values.begin(), sigma.values.end(), 0.0);
        sigma.warm = true;
        sigma.last_sweeps = 0;
        sigma.last_residual = 0.0;
        return;
    }

    const std::size_t n = g.interior_count();
    auto& w = sigma.work;
    w.source.resize(n);
    w.rho.resize(n);
    w.next.resize(n);
    const std::span<const double> source = w.source;
    igr_source_field(field, params.alpha, w.source, exec);
    for (int j = 0; j < g.ny(); ++j) {
        const double* r = field.data(kRho) + g.index(0, j);
        std::copy(r, r + g.nx(), w.rho.begin() + static_cast<std::ptrdiff_t>(j) * g.nx());
    }
    if (params.solver == SigmaSolver::direct) {
        sigma.values = solve_elliptic_1d(sigma.layout, w.rho, source, params.alpha);
        sigma.warm = true;
        sigma.last_sweeps = 0;
        sigma.last_residual = elliptic_residual(sigma.layout, w.rho, source, sigma.values, params.alpha);
        return;
    }
    if (w.op) {
        w.op->rebuild(w.rho, params.alpha);
    } else {
        w.op.emplace(sigma.layout, w.rho, params.alpha);
    }
    const EllipticOperator& op = *w.op;

    double scale = 0.0;
#pragma omp simd reduction(max : scale)
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(source[i]));

    const int budget = sigma.warm ? params.max_sweeps : std::max(params.max_sweeps, params.cold_sweeps);
    std::vector<double>& next = w.next;
    int sweeps = 0;
    double rel = 0.0;
    while (sweeps < budget) {
        const double r = op.sweep(source, sigma.values, next, exec);
        sigma.values.swap(next);
        ++sweeps;
        rel = scale > 0.0 ? r / scale : r;
        if (rel <= params.rel_tol) break;
    }
    sigma.warm = true;
    sigma.last_sweeps = sweeps;
    sigma.last_residual = rel;
}

void fill_sigma_padded(const Grid& grid, const SigmaField& sigma, std::span<double> padded) {
    const int nx = grid.nx();
    const int ny = grid.ny();
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            padded[grid.index(i, j)] = sigma.values[static_cast<std::size_t>(j) * nx + i];
        }
        for (int k = 0; k < kGhost; ++k) {
            const int lo_src = sigma.layout.periodic_x ? nx - 1 - k : k;
            const int hi_src = sigma.layout.periodic_x ? k : nx - 1 - k;
            padded[grid.index(-1 - k, j)] = padded[grid.index(lo_src, j)];
            padded[grid.index(nx + k, j)] = padded[grid.index(hi_src, j)];
        }
    }
    if (grid.dim != 2) return;
    for (int i = -kGhost; i < nx + kGhost; ++i) {
        for (int k = 0; k < kGhost; ++k) {
            const int lo_src = sigma.layout.periodic_y ? ny - 1 - k : k;
            const int hi_src = sigma.layout.periodic_y ? k : ny - 1 - k;
            padded[grid.index(i, -1 - k)] = padded[grid.index(i, lo_src)];
            padded[grid.index(i, ny + k)] = padded[grid.index(i, hi_src)];
        }
    }
}

} // namespace igrfv
