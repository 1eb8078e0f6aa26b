#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qdt/phys.hpp"

// Three-level optical Bloch system: |1> resonance, |2> bound, |3> continuum.
// Populations s11, s22, s33 and the coherence s12 (s21 is its conjugate by
// construction). The tunneling rate Gamma_p(t) carries the power-law era.
namespace qdt::bl3 {

using cplx = std::complex<double>;

struct BlochState {
    double s11 = 0.0, s22 = 1.0, s33 = 0.0;
    cplx s12{0.0, 0.0};
    double trace() const { return s11 + s22 + s33; }
};

enum class DriveMode { cw, pulse };

struct BlochDrive {
    DriveMode mode = DriveMode::cw;
    double intensity_w_cm2 = 1.0;
    double dipole_e_nm = 0.0124;   // |<2|d|1>| in e nm
    double detuning_ev = 0.0;      // delta_L
    double gamma12 = 2.55e5;       // 1/s, radiative 1 -> 2
    double t1_s = 10e-9;           // switch-off time (pulse mode)
    double delta_s = 0.159e-9;     // switch width (~1 GHz)
    double rabi0_ev = 0.0;         // derived on construction

    static BlochDrive make(DriveMode mode, double intensity, double dipole_e_nm,
                           double detuning_ev, double gamma12, double t1_s, double delta_s);
};

struct TunnelRate {
    double gamma_star = 1.975e10;  // 1/s
    double tau = 0.0;              // = 1/gamma_star
    bool power_enabled = true;
    double beta_s = 0.0;           // power amplitude time scale (s)

    // beta = knob * pi hbar sqrt(k* (x - x_max)) / (2 E*)
    static TunnelRate make(double gamma_star_per_s, double k_star_nm, double x_offset_nm,
                           double e_star_ev, bool power_enabled = true, double knob = 1.0);
};

// Peak field (V/m) of a plane wave of intensity I (W/cm^2).
double field_from_intensity(double i_w_cm2);
// Rabi energy d E0 in eV.
double rabi0_from_intensity(double i_w_cm2, double dipole_e_nm);

// Drive envelope Omega(t) in eV (CW constant, pulse arctan-switched).
double rabi(const BlochDrive& d, double t_s);

// Instantaneous tunneling rate, analytic log-derivative of
// |e^{-G t/2} + e^{-i pi/4} beta/(t+tau)|^2.
double gamma_p(const TunnelRate& tr, double t_s);

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive embedded Dormand-Prince 5(4) with componentwise error control,
// step growth capped at x5, re-seeded at the drive switch. pauli toggles the
// (1 - s22) blocking factors. Returns states at the requested times.
std::vector<BlochState> integrate(const BlochState& y0, const BlochDrive& drive,
                                  const TunnelRate& tr, const std::vector<double>& t_out,
                                  double tol = 1e-10, bool pauli = true);

// Survival 1 - s33(t) starting from a filled bound state.
struct SurvivalPoint {
    double t;
    BlochState state;
    double survival;  // 1 - s33
};
std::vector<SurvivalPoint> survival_under_drive(const BlochDrive& drive, const TunnelRate& tr,
                                                const std::vector<double>& t_out,
                                                double tol = 1e-10, bool pauli = true);

// Power-law onset: the knee of P against log t — the first time after the
// steepest drop where the drop rate per decade falls below frac of its peak.
double onset_time(const std::vector<SurvivalPoint>& series, double frac = 0.05);

}  // namespace qdt::bl3
