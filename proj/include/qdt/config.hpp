#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Run configuration for the CLI: one JSON document with per-subcommand
// sections; defaults are the reference dot parameter set.
namespace qdt::cfg {

struct DotConfig {
    double a_nm = 5.0;
    double delta_nm = 4.0;
    double vw_ev = 10.0;
    double b_over_a = 1.2071067811865476;  // (sqrt(2)+1)/2
    double mass_ratio = 0.1;
};

struct GridConfig {
    double x_span_nm = 28.0;
    double h_nm = 0.01;
};

struct LevelsConfig {
    double e_min_ev = -2.55;
    double e_max_ev = 2.25;
};

struct ProfileConfig {
    double delta_nu_ghz = 1.0;
    double x_offset_nm = 1.0;
    std::string source = "exact";  // or "semiclassical"
    int n_resonance = 6;
    double t_min_over_tp = 0.02;
    double t_max_over_tp = 1000.0;
    int points_per_decade = 60;
    bool no_power = false;
    bool interference = false;
};

struct BlochConfig {
    std::string mode = "cw";  // "cw" -> Fig 7 set, "pulse" -> Fig 8 set
    double intensity_w_cm2 = 1.0;
    double intensity_high_w_cm2 = 10.0;
    std::vector<double> pulse_ns = {1.0, 10.0};
    double gamma12_per_s = 2.55e5;
    double dipole_e_nm = 0.0124;
    double detuning_ev = 0.0;
    double switch_width_ns = 0.159;
    double t_max_ns = 4000.0;
    int points = 300;
    double tol = 1e-10;
    bool pauli = true;
};

struct DesignConfig {
    std::vector<double> a_list_nm = {4.0, 5.0, 6.0, 7.0};
    std::vector<double> delta_list_nm = {2.0, 4.0};
    std::vector<double> vw_list_ev = {5.0, 10.0};
    double delta_nu_ghz = 1.0;
    double x_offset_nm = 1.0;
    double lifetime_min_s = 1e-9;
    double lifetime_max_s = 1e-3;
    double remnant_floor = 1e-10;
    bool refine = false;
};

struct AlphaConfig {
    int A = 212, Z = 84, N = 128;
    double q_mev = 8.78;
    std::optional<double> delta_e_mev;  // absent -> calibrated
    double xi_calibration = 40.56;
    double calibration_r_m = 0.1;
    double r_m = 0.1;
    std::vector<int> a_scan = {150, 180, 212, 240};
};

struct WeberConfig {
    double a_u = 2.0;
    double u_min_over_au = 1.05;
    double u_max_over_au = 6.0;
    int points = 160;
};

struct RampConfig {
    double a_nm = 5.0;
    double v0_ev = 20.0;
    double v1_ev = 20.0;
    double slope_ev_nm = 10.0;
    double x_obs_nm = 9.0;
    double t_min_s = 1e-14;
    double t_max_s = 1e-9;
    int points = 160;
    double mass_ratio = 0.1;
};

struct RunConfig {
    DotConfig dot;
    GridConfig grid;
    LevelsConfig levels;
    ProfileConfig profile;
    BlochConfig bloch;
    DesignConfig design;
    AlphaConfig alpha;
    WeberConfig weber;
    RampConfig ramp;
    std::string out_dir = ".";
    int workers = 1;
    unsigned seed = 0;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RunConfig load(const std::string& path);
RunConfig from_json_text(const std::string& text);
std::string to_json_text(const RunConfig& c);
// Throws ValidationError when a section violates a module invariant.
void validate(const RunConfig& c);

}  // namespace qdt::cfg
