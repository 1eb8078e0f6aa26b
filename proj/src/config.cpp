#include "qdt/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qdt::cfg {

using nlohmann::json;

namespace {

template <class T>
void get_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

json dot_to_json(const DotConfig& c) {
    return {{"a_nm", c.a_nm}, {"delta_nm", c.delta_nm}, {"vw_ev", c.vw_ev},
            {"b_over_a", c.b_over_a}, {"mass_ratio", c.mass_ratio}};
}

void dot_from_json(const json& j, DotConfig& c) {
    get_if(j, "a_nm", c.a_nm);
    get_if(j, "delta_nm", c.delta_nm);
    get_if(j, "vw_ev", c.vw_ev);
    get_if(j, "b_over_a", c.b_over_a);
    get_if(j, "mass_ratio", c.mass_ratio);
}

}  // namespace

std::string to_json_text(const RunConfig& c) {
    json j;
    j["dot"] = dot_to_json(c.dot);
    j["grid"] = {{"x_span_nm", c.grid.x_span_nm}, {"h_nm", c.grid.h_nm}};
    j["levels"] = {{"e_min_ev", c.levels.e_min_ev}, {"e_max_ev", c.levels.e_max_ev}};
    j["profile"] = {{"delta_nu_ghz", c.profile.delta_nu_ghz},
                    {"x_offset_nm", c.profile.x_offset_nm},
                    {"source", c.profile.source},
                    {"n_resonance", c.profile.n_resonance},
                    {"t_min_over_tp", c.profile.t_min_over_tp},
                    {"t_max_over_tp", c.profile.t_max_over_tp},
                    {"points_per_decade", c.profile.points_per_decade},
                    {"no_power", c.profile.no_power},
                    {"interference", c.profile.interference}};
    j["bloch"] = {{"mode", c.bloch.mode},
                  {"intensity_w_cm2", c.bloch.intensity_w_cm2},
                  {"intensity_high_w_cm2", c.bloch.intensity_high_w_cm2},
                  {"pulse_ns", c.bloch.pulse_ns},
                  {"gamma12_per_s", c.bloch.gamma12_per_s},
                  {"dipole_e_nm", c.bloch.dipole_e_nm},
                  {"detuning_ev", c.bloch.detuning_ev},
                  {"switch_width_ns", c.bloch.switch_width_ns},
                  {"t_max_ns", c.bloch.t_max_ns},
                  {"points", c.bloch.points},
                  {"tol", c.bloch.tol},
                  {"pauli", c.bloch.pauli}};
    j["design"] = {{"a_list_nm", c.design.a_list_nm},
                   {"delta_list_nm", c.design.delta_list_nm},
                   {"vw_list_ev", c.design.vw_list_ev},
                   {"delta_nu_ghz", c.design.delta_nu_ghz},
                   {"x_offset_nm", c.design.x_offset_nm},
                   {"lifetime_min_s", c.design.lifetime_min_s},
                   {"lifetime_max_s", c.design.lifetime_max_s},
                   {"remnant_floor", c.design.remnant_floor},
                   {"refine", c.design.refine}};
    j["alpha"] = {{"A", c.alpha.A}, {"Z", c.alpha.Z}, {"N", c.alpha.N},
                  {"q_mev", c.alpha.q_mev},
                  {"xi_calibration", c.alpha.xi_calibration},
                  {"calibration_r_m", c.alpha.calibration_r_m},
                  {"r_m", c.alpha.r_m},
                  {"a_scan", c.alpha.a_scan}};
    if (c.alpha.delta_e_mev) j["alpha"]["delta_e_mev"] = *c.alpha.delta_e_mev;
    j["weber"] = {{"a_u", c.weber.a_u},
                  {"u_min_over_au", c.weber.u_min_over_au},
                  {"u_max_over_au", c.weber.u_max_over_au},
                  {"points", c.weber.points}};
    j["ramp"] = {{"a_nm", c.ramp.a_nm}, {"v0_ev", c.ramp.v0_ev}, {"v1_ev", c.ramp.v1_ev},
                 {"slope_ev_nm", c.ramp.slope_ev_nm}, {"x_obs_nm", c.ramp.x_obs_nm},
                 {"t_min_s", c.ramp.t_min_s}, {"t_max_s", c.ramp.t_max_s},
                 {"points", c.ramp.points}, {"mass_ratio", c.ramp.mass_ratio}};
    j["out_dir"] = c.out_dir;
    j["workers"] = c.workers;
    j["seed"] = c.seed;
    return j.dump(2);
}

RunConfig from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config parse: ") + e.what());
    }
    RunConfig c;
    try {
        if (j.contains("dot")) dot_from_json(j["dot"], c.dot);
        if (j.contains("grid")) {
            get_if(j["grid"], "x_span_nm", c.grid.x_span_nm);
            get_if(j["grid"], "h_nm", c.grid.h_nm);
        }
        if (j.contains("levels")) {
            get_if(j["levels"], "e_min_ev", c.levels.e_min_ev);
            get_if(j["levels"], "e_max_ev", c.levels.e_max_ev);
        }
        if (j.contains("profile")) {
            const json& p = j["profile"];
            get_if(p, "delta_nu_ghz", c.profile.delta_nu_ghz);
            get_if(p, "x_offset_nm", c.profile.x_offset_nm);
            get_if(p, "source", c.profile.source);
            get_if(p, "n_resonance", c.profile.n_resonance);
            get_if(p, "t_min_over_tp", c.profile.t_min_over_tp);
            get_if(p, "t_max_over_tp", c.profile.t_max_over_tp);
            get_if(p, "points_per_decade", c.profile.points_per_decade);
            get_if(p, "no_power", c.profile.no_power);
            get_if(p, "interference", c.profile.interference);
        }
        if (j.contains("bloch")) {
            const json& b = j["bloch"];
            get_if(b, "mode", c.bloch.mode);
            get_if(b, "intensity_w_cm2", c.bloch.intensity_w_cm2);
            get_if(b, "intensity_high_w_cm2", c.bloch.intensity_high_w_cm2);
            get_if(b, "pulse_ns", c.bloch.pulse_ns);
            get_if(b, "gamma12_per_s", c.bloch.gamma12_per_s);
            get_if(b, "dipole_e_nm", c.bloch.dipole_e_nm);
            get_if(b, "detuning_ev", c.bloch.detuning_ev);
            get_if(b, "switch_width_ns", c.bloch.switch_width_ns);
            get_if(b, "t_max_ns", c.bloch.t_max_ns);
            get_if(b, "points", c.bloch.points);
            get_if(b, "tol", c.bloch.tol);
            get_if(b, "pauli", c.bloch.pauli);
        }
        if (j.contains("design")) {
            const json& d = j["design"];
            get_if(d, "a_list_nm", c.design.a_list_nm);
            get_if(d, "delta_list_nm", c.design.delta_list_nm);
            get_if(d, "vw_list_ev", c.design.vw_list_ev);
            get_if(d, "delta_nu_ghz", c.design.delta_nu_ghz);
            get_if(d, "x_offset_nm", c.design.x_offset_nm);
            get_if(d, "lifetime_min_s", c.design.lifetime_min_s);
            get_if(d, "lifetime_max_s", c.design.lifetime_max_s);
            get_if(d, "remnant_floor", c.design.remnant_floor);
            get_if(d, "refine", c.design.refine);
        }
        if (j.contains("alpha")) {
            const json& a = j["alpha"];
            get_if(a, "A", c.alpha.A);
            get_if(a, "Z", c.alpha.Z);
            get_if(a, "N", c.alpha.N);
            get_if(a, "q_mev", c.alpha.q_mev);
            if (a.contains("delta_e_mev")) c.alpha.delta_e_mev = a["delta_e_mev"].get<double>();
            get_if(a, "xi_calibration", c.alpha.xi_calibration);
            get_if(a, "calibration_r_m", c.alpha.calibration_r_m);
            get_if(a, "r_m", c.alpha.r_m);
            get_if(a, "a_scan", c.alpha.a_scan);
        }
        if (j.contains("weber")) {
            const json& w = j["weber"];
            get_if(w, "a_u", c.weber.a_u);
            get_if(w, "u_min_over_au", c.weber.u_min_over_au);
            get_if(w, "u_max_over_au", c.weber.u_max_over_au);
            get_if(w, "points", c.weber.points);
        }
        if (j.contains("ramp")) {
            const json& r = j["ramp"];
            get_if(r, "a_nm", c.ramp.a_nm);
            get_if(r, "v0_ev", c.ramp.v0_ev);
            get_if(r, "v1_ev", c.ramp.v1_ev);
            get_if(r, "slope_ev_nm", c.ramp.slope_ev_nm);
            get_if(r, "x_obs_nm", c.ramp.x_obs_nm);
            get_if(r, "t_min_s", c.ramp.t_min_s);
            get_if(r, "t_max_s", c.ramp.t_max_s);
            get_if(r, "points", c.ramp.points);
            get_if(r, "mass_ratio", c.ramp.mass_ratio);
        }
        get_if(j, "out_dir", c.out_dir);
        get_if(j, "workers", c.workers);
        get_if(j, "seed", c.seed);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config field: ") + e.what());
    }
    return c;
}

RunConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

void validate(const RunConfig& c) {
    const auto fail = [](const std::string& m) { throw ValidationError(m); };
    if (!(c.dot.a_nm > 0.0) || !(c.dot.delta_nm > 0.0) || !(c.dot.vw_ev > 0.0))
        fail("dot: a, Delta, V_w must be > 0");
    if (!(c.dot.b_over_a > 1.0 && c.dot.b_over_a < std::sqrt(2.0)))
        fail("dot: b/a must lie in (1, sqrt(2))");
    if (!(c.dot.mass_ratio > 0.0)) fail("dot: mass ratio must be > 0");
    if (!(c.grid.h_nm > 0.0) || !(c.grid.x_span_nm > 0.0)) fail("grid: bad spacing or span");
    if (c.grid.h_nm > std::min(c.dot.a_nm, c.dot.delta_nm) / 50.0)
        fail("grid: h must be <= min(a, Delta)/50");
    if (!(c.levels.e_max_ev > c.levels.e_min_ev)) fail("levels: empty window");
    if (!(c.profile.delta_nu_ghz > 0.0)) fail("profile: laser width must be > 0");
    if (!(c.profile.x_offset_nm > 0.0)) fail("profile: x offset must be > 0");
    if (c.profile.source != "exact" && c.profile.source != "semiclassical")
        fail("profile: source must be exact|semiclassical");
    if (c.bloch.mode != "cw" && c.bloch.mode != "pulse") fail("bloch: mode must be cw|pulse");
    if (!(c.bloch.tol >= 1e-12 && c.bloch.tol <= 1e-6)) fail("bloch: tol out of [1e-12, 1e-6]");
    if (!(c.bloch.switch_width_ns > 0.0)) fail("bloch: switch width must be > 0");
    if (c.design.a_list_nm.empty() || c.design.delta_list_nm.empty() ||
        c.design.vw_list_ev.empty())
        fail("design: empty sweep axis");
    if (c.alpha.A != c.alpha.Z + c.alpha.N) fail("alpha: A != Z + N");
    if (!(c.alpha.q_mev > 0.0)) fail("alpha: Q must be > 0");
    if (!(c.alpha.r_m > 0.0)) fail("alpha: detection distance must be > 0");
    if (!(c.weber.a_u > 0.0)) fail("weber: a_u must be > 0");
    if (!(c.ramp.slope_ev_nm > 0.0) || !(c.ramp.v0_ev > 0.0) || !(c.ramp.v1_ev > 0.0))
        fail("ramp: V0, V1, slope must be > 0");
    if (c.workers < 1) fail("workers must be >= 1");
}

}  // namespace qdt::cfg
