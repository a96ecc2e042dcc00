#pragma once

#include "igrfv/cases.hpp"
#include "igrfv/integrate.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace igrfv {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, int line = 0)
        : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class StudyRegime { fixed_alpha, alpha_sweep, joint };

std::string_view to_string(StudyRegime regime);

struct OutputConfig {
    std::string dir = "out";
    std::vector<double> times;  // snapshot times; t_final is always written
    int series_stride = 0;      // 0 disables the per-step series CSV
};

struct StudyConfig {
    StudyRegime regime = StudyRegime::fixed_alpha;
    std::vector<int> resolutions;
    std::vector<double> alphas;      // alpha_sweep only
    double alpha = 1e-4;             // fixed_alpha only
    double joint_factor = 1.0;       // joint: alpha = joint_factor * dx^2
    int reference_resolution = 0;    // 0: four times the finest resolution
    std::vector<double> times;       // evaluation times; defaults to t_final
};

struct RunConfig {
    std::string case_name;
    int resolution = 0;
    SchemeConfig scheme;
    CaseOverrides overrides;
    OutputConfig output;
    std::optional<StudyConfig> study;
};

// Flat `key = value` lines grouped by `[section]` headers; `#` starts a
// comment. Keys before any header belong to [run]. Overrides use
// `section.key=value` (or a bare run key) and win over the text.
// Throws ParseError on malformed lines and ValidationError on unknown keys or
// invalid values, both anchored to the offending line (0 for overrides).
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

// Every accepted qualified key, e.g. "igr.alpha_factor".
std::vector<std::string> known_config_keys();

} // namespace igrfv
