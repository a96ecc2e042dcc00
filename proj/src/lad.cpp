#include "igrfv/lad.hpp"

#include <algorithm>
#include <stdexcept>

namespace igrfv {

LadCoefficient lad_coefficient(const ConservedField& field, const LadParams& params) {
    const Grid& g = field.grid();
    if (g.dim != 1) throw std::invalid_argument("lad_coefficient: LAD is 1D only");
    const int m = g.nx();
    const double dx = g.spacing[0];

    // Sensor on cells -2 .. m+1, where the central difference still has data.
    const int lo = -(kGhost - 1);
    const int n = m + 2 * (kGhost - 1);
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int i = lo + k;
        const double up = field.at(kMomX, i + 1) / field.at(kRho, i + 1);
        const double um = field.at(kMomX, i - 1) / field.at(kRho, i - 1);
        const double div = (up - um) / (2.0 * dx);
        s[static_cast<std::size_t>(k)] = field.at(kRho, i) * std::max(0.0, -div);
    }

    std::vector<double> tmp(s.size());
    for (int pass = 0; pass < params.smoothing_passes; ++pass) {
        for (int k = 0; k < n; ++k) {
            const double left = s[static_cast<std::size_t>(std::max(k - 1, 0))];
            const double right = s[static_cast<std::size_t>(std::min(k + 1, n - 1))];
            tmp[static_cast<std::size_t>(k)] = 0.25 * left + 0.5 * s[static_cast<std::size_t>(k)] + 0.25 * right;
        }
        s.swap(tmp);
    }

    LadCoefficient out;
    out.zeta.resize(static_cast<std::size_t>(m + 2));
    const double scale = params.coeff * dx * dx;
    for (int i = -1; i <= m; ++i) {
        out.zeta[static_cast<std::size_t>(i + 1)] = scale * s[static_cast<std::size_t>(i - lo)];
    }
    return out;
}

LadTerms lad_terms(const ConservedField& field, const LadCoefficient& zeta) {
    const Grid& g = field.grid();
    const int m = g.nx();
    const double dx = g.spacing[0];
    auto vel = [&](int i) { return field.at(kMomX, i) / field.at(kRho, i); };

    // D at face i+1/2 for i = -1 .. m-1.
    std::vector<double> d(static_cast<std::size_t>(m + 1));
    for (int i = -1; i < m; ++i) {
        const double zf = 0.5 * (zeta.at(i) + zeta.at(i + 1));
        d[static_cast<std::size_t>(i + 1)] = zf * (vel(i + 1) - vel(i)) / dx;
    }
    LadTerms out;
    out.momentum.resize(static_cast<std::size_t>(m));
    out.energy.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double mom = (d[static_cast<std::size_t>(i + 1)] - d[static_cast<std::size_t>(i)]) / dx;
        out.momentum[static_cast<std::size_t>(i)] = mom;
        out.energy[static_cast<std::size_t>(i)] = mom * vel(i);
    }
    return out;
}

} // namespace igrfv
