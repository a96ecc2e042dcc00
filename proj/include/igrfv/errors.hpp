#pragma once

#include <stdexcept>
#include <string>

namespace igrfv {

// Raised when a cell (or a reconstructed face state) has rho <= 0, p <= 0 or
// a non-finite value. Carries enough context to report where a run blew up.
class NonPhysicalState : public std::runtime_error {
public:
    NonPhysicalState(const std::string& what, int i, int j, double rho, double p)
        : std::runtime_error(what), i_(i), j_(j), rho_(rho), p_(p) {}

    int i() const { return i_; }
    int j() const { return j_; }
    double rho() const { return rho_; }
    double pressure() const { return p_; }
    double time() const { return time_; }
    int stage() const { return stage_; }
    long step() const { return step_; }

    void set_context(double time, int stage, long step) {
        time_ = time;
        stage_ = stage;
        step_ = step;
    }

    std::string describe() const;

private:
    int i_;
    int j_;
    double rho_;
    double p_;
    double time_ = 0.0;
    int stage_ = -1;
    long step_ = -1;
};

class VacuumGenerated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownCase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IncompatibleGrids : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace igrfv
