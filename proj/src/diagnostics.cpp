#include "igrfv/diagnostics.hpp"

#include "igrfv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace igrfv {

std::string_view to_string(Quantity q) {
    switch (q) {
    case Quantity::rho: return "rho";
    case Quantity::u: return "u";
    case Quantity::v: return "v";
    case Quantity::p: return "p";
    case Quantity::E: return "E";
    case Quantity::internal_energy: return "internal_energy";
    case Quantity::momentum: return "momentum";
    }
    return "?";
}

Quantity quantity_from_string(std::string_view name) {
    for (Quantity q : {Quantity::rho, Quantity::u, Quantity::v, Quantity::p, Quantity::E,
                       Quantity::internal_energy, Quantity::momentum}) {
        if (name == to_string(q)) return q;
    }
    throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

double quantity_value(const ConservedState& u, Quantity q, const EosParams& eos) {
    switch (q) {
    case Quantity::rho: return u.rho;
    case Quantity::u: return u.mom[0] / u.rho;
    case Quantity::v: return u.mom[1] / u.rho;
    case Quantity::p: return (eos.gamma - 1.0) * internal_energy_density(u);
    case Quantity::E: return u.E;
    case Quantity::internal_energy: return internal_energy_density(u) / u.rho;
    case Quantity::momentum: return u.mom[0];
    }
    return 0.0;
}

double quantity_value(const PrimitiveState& w, Quantity q, const EosParams& eos) {
    switch (q) {
    case Quantity::rho: return w.rho;
    case Quantity::u: return w.vel[0];
    case Quantity::v: return w.vel[1];
    case Quantity::p: return w.p;
    case Quantity::internal_energy: return w.p / ((eos.gamma - 1.0) * w.rho);
    case Quantity::momentum: return w.rho * w.vel[0];
    case Quantity::E:
        return w.p / (eos.gamma - 1.0) +
               0.5 * w.rho * (w.vel[0] * w.vel[0] + w.vel[1] * w.vel[1]);
    }
    return 0.0;
}

namespace {

template <class ErrorAt>
double reduce(const Grid& g, Norm norm, ErrorAt&& err) {
    double acc = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const double e = std::abs(err(i, j));
            acc = norm == Norm::L1 ? acc + e : std::max(acc, e);
        }
    }
    return norm == Norm::L1 ? acc * g.cell_volume() : acc;
}

struct Overlap {
    int fine;
    double weight;
};

// For each coarse cell along one axis, the fine cells it overlaps and their
// fractional coverage of the coarse cell.
std::vector<std::vector<Overlap>> overlaps(const Grid& fine, const Grid& coarse, int axis) {
    const int nf = fine.cells[axis];
    const int nc = coarse.cells[axis];
    std::vector<std::vector<Overlap>> out(static_cast<std::size_t>(nc));
    // Work in units of fine cells so integer ratios stay exact.
    const double ratio = static_cast<double>(nf) / nc;
    for (int c = 0; c < nc; ++c) {
        const double a = c * ratio;
        const double b = (c + 1) * ratio;
        const int f0 = static_cast<int>(std::floor(a));
        const int f1 = std::min(nf - 1, static_cast<int>(std::ceil(b)) - 1);
        for (int f = f0; f <= f1; ++f) {
            const double len = std::min<double>(b, f + 1) - std::max<double>(a, f);
            if (len > 0.0) out[static_cast<std::size_t>(c)].push_back({f, len / ratio});
        }
    }
    return out;
}

void require_compatible(const Grid& fine, const Grid& coarse) {
    if (fine.dim != coarse.dim) throw IncompatibleGrids("grids differ in dimension");
    for (int a = 0; a < fine.dim; ++a) {
        const double tol = 1e-12 * std::max(1.0, std::abs(fine.length(a)));
        if (std::abs(fine.lo[a] - coarse.lo[a]) > tol || std::abs(fine.hi[a] - coarse.hi[a]) > tol)
            throw IncompatibleGrids("grids cover different domains");
        if (fine.cells[a] < coarse.cells[a])
            throw IncompatibleGrids("reference grid is coarser than the field");
    }
}

} // namespace

double error_norm(const ConservedField& field, const ReferenceSolution& reference, double t,
                  Quantity q, Norm norm) {
    const Grid& g = field.grid();
    const EosParams eos = field.eos();
    return reduce(g, norm, [&](int i, int j) {
        const double x = g.center(0, i);
        const double y = g.dim == 2 ? g.center(1, j) : 0.0;
        return quantity_value(field.state(i, j), q, eos) - quantity_value(reference(x, y, t), q, eos);
    });
}

double error_norm(const ConservedField& field, const ConservedField& reference, Quantity q,
                  Norm norm) {
    require_compatible(reference.grid(), field.grid());
    const ConservedField avg = same_layout(reference.grid(), field.grid())
                                   ? reference
                                   : conservative_average(reference, field.grid());
    const EosParams eos = field.eos();
    return reduce(field.grid(), norm, [&](int i, int j) {
        return quantity_value(field.state(i, j), q, eos) - quantity_value(avg.state(i, j), q, eos);
    });
}

ConservedField conservative_average(const ConservedField& fine, const Grid& coarse) {
    const Grid& fg = fine.grid();
    require_compatible(fg, coarse);
    ConservedField out(coarse, fine.gamma());
    const auto ox = overlaps(fg, coarse, 0);
    const auto oy = coarse.dim == 2 ? overlaps(fg, coarse, 1)
                                    : std::vector<std::vector<Overlap>>{{{0, 1.0}}};
    for (int v : active_vars(coarse.dim)) {
        const double* src = fine.data(v);
        double* dst = out.data(v);
        for (int j = 0; j < coarse.ny(); ++j) {
            for (int i = 0; i < coarse.nx(); ++i) {
                double sum = 0.0;
                for (const Overlap& b : oy[static_cast<std::size_t>(j)]) {
                    for (const Overlap& a : ox[static_cast<std::size_t>(i)]) {
                        sum += a.weight * b.weight * src[fg.index(a.fine, b.fine)];
                    }
                }
                dst[coarse.index(i, j)] = sum;
            }
        }
    }
    return out;
}

std::vector<double> observed_order(const std::vector<std::pair<double, double>>& errors) {
    if (errors.size() < 2) throw std::invalid_argument("observed_order needs two samples");
    std::vector<double> orders;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        const auto [h0, e0] = errors[k];
        const auto [h1, e1] = errors[k + 1];
        if (!(h0 > 0 && h1 > 0 && e0 > 0 && e1 > 0))
            throw std::invalid_argument("observed_order needs positive samples");
        orders.push_back(std::log(e0 / e1) / std::log(h0 / h1));
    }
    return orders;
}

double fitted_order(const std::vector<std::pair<double, double>>& errors) {
    if (errors.size() < 2) throw std::invalid_argument("fitted_order needs two samples");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(errors.size());
    for (const auto& [h, e] : errors) {
        if (!(h > 0 && e > 0)) throw std::invalid_argument("fitted_order needs positive samples");
        const double x = std::log(h);
        const double y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double relative_drift(double a, double b, double scale) {
    const double d = std::abs(a - b);
    if (d == 0.0) return 0.0;
    const double den = std::max(std::abs(a), scale);
    return den > 0.0 ? d / den : d;
}

Invariants invariant_scales(const ConservedField& field) {
    const Grid& g = field.grid();
    Invariants s;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            s.mass += std::abs(field.at(kRho, i, j));
            s.momentum[0] += std::abs(field.at(kMomX, i, j));
            if (g.dim == 2) s.momentum[1] += std::abs(field.at(kMomY, i, j));
            s.energy += std::abs(field.at(kEnergy, i, j));
        }
    }
    const double vol = g.cell_volume();
    s.mass *= vol;
    s.momentum[0] *= vol;
    s.momentum[1] *= vol;
    s.energy *= vol;
    return s;
}

RunSummary run_report(const std::vector<StepRecord>& history, const Invariants& initial,
                      const Invariants& scale) {
    RunSummary r;
    if (history.empty()) return r;
    r.min_rho = history.front().min_rho;
    r.min_p = history.front().min_p;
    for (const StepRecord& s : history) {
        r.min_rho = std::min(r.min_rho, s.min_rho);
        r.min_p = std::min(r.min_p, s.min_p);
        r.max_speed = std::max(r.max_speed, s.max_speed);
        r.max_sigma_sweeps = std::max(r.max_sigma_sweeps, s.sigma_sweeps);
        r.max_sigma_residual = std::max(r.max_sigma_residual, s.sigma_residual);
        if (!std::isfinite(s.min_rho) || !std::isfinite(s.min_p)) r.has_nan = true;
    }
    const StepRecord& last = history.back();
    r.steps = last.step;
    r.t_end = last.t;
    r.mass_drift = relative_drift(initial.mass, last.totals.mass, scale.mass);
    r.momentum_drift = std::max(
        relative_drift(initial.momentum[0], last.totals.momentum[0], scale.momentum[0]),
        relative_drift(initial.momentum[1], last.totals.momentum[1], scale.momentum[1]));
    r.energy_drift = relative_drift(initial.energy, last.totals.energy, scale.energy);
    return r;
}

} // namespace igrfv
