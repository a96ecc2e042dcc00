#pragma once

#include "igrfv/boundary.hpp"
#include "igrfv/field.hpp"
#include "igrfv/grid.hpp"
#include "igrfv/state.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace igrfv {

using InitialCondition = std::function<PrimitiveState(double x, double y)>;
using ReferenceSolution = std::function<PrimitiveState(double x, double y, double t)>;

// One benchmark problem, fully resolved for a particular resolution.
struct CaseSpec {
    std::string name;
    int dim = 1;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{1.0, 0.0};
    double gamma = 1.4;
    double t_final = 0.0;
    BoundarySpec bc;
    InitialCondition ic;
    double smoothing_eps = 0.0;
    ReferenceSolution reference;  // empty when no analytic/self-similar solution
};

// Optional per-run changes. `params` holds case-specific knobs
// (see case_parameters()).
struct CaseOverrides {
    std::optional<double> eps;
    std::optional<double> t_final;
    std::map<std::string, double> params;
};

struct BuiltCase {
    Grid grid;
    ConservedField field;
    BoundarySpec bc;
    CaseSpec spec;
};

std::vector<std::string> case_names();

// 1 or 2; throws UnknownCase.
int case_dimension(std::string_view name);

// Names of the case-specific keys accepted in CaseOverrides::params.
std::vector<std::string> case_parameters(std::string_view name);

// Default tanh width for smoothed runs at the given resolution (0 for smooth cases).
double default_smoothing(std::string_view name, int resolution);

// Builds grid, boundary data and the t = 0 field by sampling the (optionally
// smoothed) initial condition at cell centers. `resolution` is the x cell
// count; 2D cases derive the y count from the aspect ratio.
// Throws UnknownCase.
BuiltCase build_case(std::string_view name, int resolution, const CaseOverrides& overrides = {});

// A piece of a piecewise initial condition; constant pieces ignore x.
using ProfilePiece = std::function<PrimitiveState(double x)>;

// Blends ordered pieces across breakpoints x_0 < x_1 < ...:
//   W(x) = P_0(x) + sum_k (P_{k+1}(x) - P_k(x)) (1 + tanh((x - x_k)/eps)) / 2.
// eps == 0 gives the sharp jump (right piece at x >= x_k).
std::function<PrimitiveState(double)> tanh_smooth(std::vector<double> breakpoints,
                                                  std::vector<ProfilePiece> pieces, double eps);

// Step weight (1 + tanh(s/eps)) / 2, or the Heaviside step for eps == 0.
double tanh_step(double s, double eps);

struct VortexParams {
    double strength = 5.0;
    double beta = 1.0;
    double gamma = 1.4;
    double rho_inf = 1.0;
    double p_inf = 1.0;
    double u_inf = 0.1;
    double v_inf = 0.0;
    double box = 10.0;  // periodic box [-box/2, box/2]^2
};

PrimitiveState vortex_exact(double x, double y, double t, const VortexParams& params = {});

struct DoubleMachStates {
    PrimitiveState pre;
    PrimitiveState post;
    double mach = 10.0;
    double angle_deg = 60.0;
    double x_foot = 1.0 / 6.0;
    double shock_speed = 0.0;  // normal speed of the shock

    // x where the shock crosses height y at time t.
    double shock_x(double y, double t) const;
};

// Pre-shock quiescent gas (1.4, 0, 0, 1) and the post-shock state from the
// normal-shock Rankine-Hugoniot relations, rotated to the shock angle.
DoubleMachStates double_mach_states(double gamma = 1.4, double mach = 10.0,
                                    double angle_deg = 60.0);

} // namespace igrfv
