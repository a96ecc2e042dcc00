#pragma once

#include "igrfv/cases.hpp"
#include "igrfv/field.hpp"
#include "igrfv/integrate.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace igrfv {

// `momentum` is the x-momentum density rho*u (the mu error of the 1D studies).
enum class Quantity { rho, u, v, p, E, internal_energy, momentum };
enum class Norm { L1, Linf };

std::string_view to_string(Quantity q);
Quantity quantity_from_string(std::string_view name);

double quantity_value(const ConservedState& u, Quantity q, const EosParams& eos);
double quantity_value(const PrimitiveState& w, Quantity q, const EosParams& eos);

struct ErrorReport {
    Quantity quantity = Quantity::rho;
    Norm norm = Norm::L1;
    double value = 0.0;
    int resolution = 0;
};

// Discrete norm of the cellwise difference; L1 = sum |e_i| * cell volume.
// Function references are evaluated at cell centers.
double error_norm(const ConservedField& field, const ReferenceSolution& reference, double t,
                  Quantity q, Norm norm);

// Finer-grid reference: conservatively averaged onto `field`'s grid first.
// Throws IncompatibleGrids if domains differ or the reference is coarser.
double error_norm(const ConservedField& field, const ConservedField& reference, Quantity q,
                  Norm norm);

// Exact conservative average of `fine` onto `coarse`: each coarse cell gets
// the overlap-weighted mean of the fine cells it covers (plain block
// averaging for integer ratios).
ConservedField conservative_average(const ConservedField& fine, const Grid& coarse);

// Pairwise orders log(e_k/e_{k+1}) / log(h_k/h_{k+1}).
std::vector<double> observed_order(const std::vector<std::pair<double, double>>& errors);

// Least-squares slope of log e against log h over all samples.
double fitted_order(const std::vector<std::pair<double, double>>& errors);

struct RunSummary {
    long steps = 0;
    double t_end = 0.0;
    double min_rho = 0.0;
    double min_p = 0.0;
    double max_speed = 0.0;
    int max_sigma_sweeps = 0;
    double max_sigma_residual = 0.0;
    double mass_drift = 0.0;  // relative, final vs initial
    double momentum_drift = 0.0;
    double energy_drift = 0.0;
    double wall_seconds = 0.0;
    bool aborted = false;
    long abort_step = -1;
    std::string abort_cause;
    bool has_nan = false;
};

// Aggregates per-step records; drifts are |I_end - I_0| / max(|I_0|, scale)
// with `scale` the initial L1 mass of that component.
RunSummary run_report(const std::vector<StepRecord>& history, const Invariants& initial,
                      const Invariants& scale);

// |a - b| / max(|a|, scale); the bare difference when that denominator is 0.
double relative_drift(double a, double b, double scale);

// Interior-cell L1 sizes of each conserved component, used as drift scales.
Invariants invariant_scales(const ConservedField& field);

} // namespace igrfv
