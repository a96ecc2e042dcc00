#include "igrfv/config.hpp"

#include "igrfv/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace igrfv {

std::string_view to_string(StudyRegime regime) {
    switch (regime) {
    case StudyRegime::fixed_alpha: return "fixed_alpha";
    case StudyRegime::alpha_sweep: return "alpha_sweep";
    case StudyRegime::joint: return "joint";
    }
    return "?";
}

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

using RawConfig = std::map<std::string, Entry>;

const std::vector<std::string>& fixed_keys() {
    static const std::vector<std::string> keys = {
        "run.case",          "run.scheme",         "run.flux",          "run.recon",
        "run.m",             "run.cfl",            "run.t_final",       "igr.alpha_factor",
        "igr.alpha",         "igr.max_sweeps",     "igr.rel_tol",       "igr.cold_sweeps",
        "igr.solver",        "lad.coeff",         "lad.smoothing_passes", "case.eps",        "output.dir",
        "output.times",      "output.series_stride", "study.regime",    "study.resolutions",
        "study.alphas",      "study.alpha",        "study.joint_factor", "study.reference_m",
        "study.times",
    };
    return keys;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string qualify(const std::string& section, const std::string& key) {
    return key.find('.') == std::string::npos ? section + "." + key : key;
}

void insert(RawConfig& raw, const std::string& key, const std::string& value, int line,
            bool replace) {
    if (key.empty()) throw ParseError("line " + std::to_string(line) + ": empty key", line);
    if (!replace && raw.count(key))
        throw ValidationError("line " + std::to_string(line) + ": duplicate key '" + key + "'", line);
    raw[key] = {value, line};
}

RawConfig parse_raw(std::string_view text, const std::vector<std::string>& overrides) {
    RawConfig raw;
    std::string section = "run";
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3)
                throw ParseError("line " + std::to_string(line_no) + ": malformed section header", line_no);
            section = trim(std::string_view(t).substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value", line_no);
        insert(raw, qualify(section, trim(std::string_view(t).substr(0, eq))),
               trim(std::string_view(t).substr(eq + 1)), line_no, false);
    }
    for (const std::string& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ParseError("override '" + o + "': expected key=value", 0);
        insert(raw, qualify("run", trim(std::string_view(o).substr(0, eq))),
               trim(std::string_view(o).substr(eq + 1)), 0, true);
    }
    return raw;
}

class Reader {
public:
    explicit Reader(const RawConfig& raw) : raw_(raw) {}

    bool has(const std::string& key) const { return raw_.count(key) != 0; }
    int line(const std::string& key) const { return has(key) ? raw_.at(key).line : 0; }

    [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
        const int ln = line(key);
        const std::string where = ln > 0 ? "line " + std::to_string(ln) + ": " : "override: ";
        throw ValidationError(where + key + ": " + msg, ln);
    }

    std::string text(const std::string& key) const { return raw_.at(key).value; }

    double number(const std::string& key) const { return parse_number(key, text(key)); }

    int integer(const std::string& key) const {
        const double v = number(key);
        if (v != std::floor(v) || std::abs(v) > 1e9) fail(key, "expected an integer");
        return static_cast<int>(v);
    }

    std::vector<double> numbers(const std::string& key) const {
        std::vector<double> out;
        const std::string s = text(key);
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const auto comma = s.find(',', pos);
            const std::string item = trim(std::string_view(s).substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos));
            if (item.empty()) fail(key, "empty list item");
            out.push_back(parse_number(key, item));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    }

private:
    double parse_number(const std::string& key, const std::string& s) const {
        double v = 0.0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        if (!s.empty() && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            fail(key, "'" + s + "' is not a number");
        return v;
    }

    const RawConfig& raw_;
};

template <class F>
auto guarded(const Reader& r, const std::string& key, F&& f) {
    try {
        return f();
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        r.fail(key, e.what());
    }
}

} // namespace

std::vector<std::string> known_config_keys() {
    std::set<std::string> keys(fixed_keys().begin(), fixed_keys().end());
    for (const std::string& name : case_names()) {
        for (const std::string& p : case_parameters(name)) keys.insert("case." + p);
    }
    return {keys.begin(), keys.end()};
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    const RawConfig raw = parse_raw(text, overrides);
    const Reader r(raw);

    if (!r.has("run.case")) throw ValidationError("missing required key 'case'", 0);
    RunConfig cfg;
    cfg.case_name = r.text("run.case");
    const auto names = case_names();
    if (std::find(names.begin(), names.end(), cfg.case_name) == names.end())
        r.fail("run.case", "unknown case '" + cfg.case_name + "'");
    const std::vector<std::string> params = case_parameters(cfg.case_name);

    for (const auto& [key, entry] : raw) {
        const auto& fk = fixed_keys();
        if (std::find(fk.begin(), fk.end(), key) != fk.end()) continue;
        if (key.rfind("case.", 0) == 0 &&
            std::find(params.begin(), params.end(), key.substr(5)) != params.end())
            continue;
        r.fail(key, "unknown key");
    }

    const int dim = case_dimension(cfg.case_name);
    const Scheme scheme = r.has("run.scheme")
                              ? guarded(r, "run.scheme", [&] { return scheme_from_string(r.text("run.scheme")); })
                              : Scheme::igr;
    cfg.scheme = default_scheme_config(scheme, dim);
    SchemeConfig& s = cfg.scheme;
    if (r.has("run.flux"))
        s.flux = guarded(r, "run.flux", [&] { return flux_from_string(r.text("run.flux")); });
    if (r.has("run.recon"))
        s.recon = guarded(r, "run.recon", [&] { return reconstruction_from_string(r.text("run.recon")); });
    if (r.has("run.cfl")) s.cfl = r.number("run.cfl");
    if (r.has("igr.alpha_factor")) s.alpha_factor = r.number("igr.alpha_factor");
    if (r.has("igr.alpha")) s.alpha = r.number("igr.alpha");
    if (r.has("igr.max_sweeps")) s.igr.max_sweeps = r.integer("igr.max_sweeps");
    if (r.has("igr.rel_tol")) s.igr.rel_tol = r.number("igr.rel_tol");
    if (r.has("igr.cold_sweeps")) s.igr.cold_sweeps = r.integer("igr.cold_sweeps");
    if (r.has("igr.solver")) {
        const std::string v = r.text("igr.solver");
        if (v == "jacobi") s.igr.solver = SigmaSolver::jacobi;
        else if (v == "direct") s.igr.solver = SigmaSolver::direct;
        else r.fail("igr.solver", "expected jacobi or direct");
    }
    if (r.has("lad.coeff")) s.lad.coeff = r.number("lad.coeff");
    if (r.has("lad.smoothing_passes")) s.lad.smoothing_passes = r.integer("lad.smoothing_passes");
    {
        const std::string anchor = r.has("run.recon") ? "run.recon" : "run.scheme";
        guarded(r, anchor, [&] { s.validate(dim); return 0; });
    }

    const bool is_study = std::any_of(raw.begin(), raw.end(),
                                      [](const auto& kv) { return kv.first.rfind("study.", 0) == 0; });
    if (r.has("run.m")) {
        cfg.resolution = r.integer("run.m");
        if (cfg.resolution < 6) r.fail("run.m", "resolution must be at least 6");
    }

    if (r.has("run.t_final")) {
        cfg.overrides.t_final = r.number("run.t_final");
        if (!(*cfg.overrides.t_final > 0.0)) r.fail("run.t_final", "must be positive");
    }
    for (const std::string& p : params) {
        if (r.has("case." + p)) cfg.overrides.params[p] = r.number("case." + p);
    }
    if (cfg.overrides.params.count("quadrature")) {
        const double q = cfg.overrides.params["quadrature"];
        if (q != std::floor(q) || q < 1 || q > 5) r.fail("case.quadrature", "must be an integer in 1..5");
    }

    if (r.has("output.dir")) cfg.output.dir = r.text("output.dir");
    if (r.has("output.times")) {
        cfg.output.times = r.numbers("output.times");
        for (double t : cfg.output.times) {
            if (!(t >= 0.0)) r.fail("output.times", "times must be >= 0");
        }
        std::sort(cfg.output.times.begin(), cfg.output.times.end());
    }
    if (r.has("output.series_stride")) {
        cfg.output.series_stride = r.integer("output.series_stride");
        if (cfg.output.series_stride < 0) r.fail("output.series_stride", "must be >= 0");
    }

    if (is_study) {
        StudyConfig st;
        if (!r.has("study.regime")) throw ValidationError("missing required key 'study.regime'", 0);
        const std::string regime = r.text("study.regime");
        if (regime == "fixed_alpha") st.regime = StudyRegime::fixed_alpha;
        else if (regime == "alpha_sweep") st.regime = StudyRegime::alpha_sweep;
        else if (regime == "joint") st.regime = StudyRegime::joint;
        else r.fail("study.regime", "expected fixed_alpha, alpha_sweep or joint");

        if (r.has("study.resolutions")) {
            for (double v : r.numbers("study.resolutions")) {
                if (v != std::floor(v) || v < 6) r.fail("study.resolutions", "resolutions must be integers >= 6");
                st.resolutions.push_back(static_cast<int>(v));
            }
            if (!std::is_sorted(st.resolutions.begin(), st.resolutions.end()) ||
                std::adjacent_find(st.resolutions.begin(), st.resolutions.end()) != st.resolutions.end())
                r.fail("study.resolutions", "resolutions must be strictly ascending");
        }
        if (r.has("study.alphas")) {
            st.alphas = r.numbers("study.alphas");
            for (std::size_t k = 0; k < st.alphas.size(); ++k) {
                if (!(st.alphas[k] > 0.0)) r.fail("study.alphas", "alphas must be positive");
                if (k > 0 && !(st.alphas[k] < st.alphas[k - 1]))
                    r.fail("study.alphas", "alphas must be strictly descending");
            }
        }
        if (r.has("study.alpha")) {
            st.alpha = r.number("study.alpha");
            if (!(st.alpha >= 0.0)) r.fail("study.alpha", "must be >= 0");
        }
        if (r.has("study.joint_factor")) {
            st.joint_factor = r.number("study.joint_factor");
            if (!(st.joint_factor > 0.0)) r.fail("study.joint_factor", "must be positive");
        }
        if (r.has("study.reference_m")) st.reference_resolution = r.integer("study.reference_m");
        if (r.has("study.times")) {
            st.times = r.numbers("study.times");
            std::sort(st.times.begin(), st.times.end());
        }
        if (st.regime == StudyRegime::alpha_sweep) {
            if (st.alphas.size() < 3) throw ValidationError("alpha_sweep needs at least 3 alphas", r.line("study.regime"));
            if (cfg.resolution == 0) throw ValidationError("alpha_sweep needs run.m", r.line("study.regime"));
        } else {
            if (st.resolutions.size() < 3)
                throw ValidationError("study needs at least 3 resolutions", r.line("study.regime"));
            if (st.reference_resolution != 0 && st.reference_resolution <= st.resolutions.back())
                r.fail("study.reference_m", "reference must be finer than every resolution");
        }
        if (cfg.resolution == 0) cfg.resolution = st.resolutions.back();
        cfg.study = st;
    } else if (cfg.resolution == 0) {
        throw ValidationError("missing required key 'm'", 0);
    }

    if (r.has("case.eps")) {
        cfg.overrides.eps = r.number("case.eps");
        if (!(*cfg.overrides.eps >= 0.0)) r.fail("case.eps", "must be >= 0");
    } else if (!cfg.study) {
        cfg.overrides.eps = (s.scheme == Scheme::igr || s.scheme == Scheme::lad)
                                ? default_smoothing(cfg.case_name, cfg.resolution)
                                : 0.0;
    }
    return cfg;
}

} // namespace igrfv
