#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "qdt/potentials.hpp"

// Exponential and power-law decay amplitudes, their interference profile,
// the wave-packet factor and the transition-time equation xi - 2 ln xi = Y.
namespace qdt::dpf {

using cplx = std::complex<double>;

struct WavePacket {
    double delta_nu_hz;   // laser width Delta nu
    double e_center;      // eV
    double delta_omega() const { return 2.0 * std::numbers::pi * delta_nu_hz * phys::hbar_ev_s; }
};

struct DecayProfileParams {
    double e_star;        // eV
    double gamma_star;    // eV
    double omega0;        // eV
    double k_star;        // nm^-1
    double x_offset;      // x - x_max, nm
    double delta_omega;   // 2 pi Delta nu, eV
    double X, Y, xi;
    double t_p;           // s
    double remnant;       // e^{-xi}
    double e_saddle;      // eV; defaults to e_star ("nearly vanishing" shift)
};

struct SaddleData {
    double e_s;           // eV
    double shift;         // E_s - parabolic value = (m/8)((x-x_max)/t)^2, eV
    double gauss_width;   // eV
};

// Lorentzian excitation weight f(E).
double wavepacket_factor(const WavePacket& wp, double E, double gamma_star);
// |f(E*)|^2 (dE)^2 / |f(Es)|^2 = (dw)^2 (1 + 4(Es-E*)^2/((dw)^2+G*^2))^2.
double wavepacket_ratio(const WavePacket& wp, double e_star, double e_saddle, double gamma_star);

// Saddle energy of the barrier phase at observation point x (nm) and time t (s).
SaddleData saddle(const pot::BarrierTop& bt, double mass_energy, double x, double t_s);

// Upper-branch root (xi > 2) of xi - 2 ln xi = Y by Newton.
// Throws std::domain_error when Y <= 2 - 2 ln 2 (no such root).
double solve_xi(double Y);

// X, Y, xi, t_p, remnant from resonance data. x_offset defaults to 1 nm (the
// value that reproduces the reference Y with the published inputs).
DecayProfileParams transition_numbers(double e_star, double gamma_star, double v_max,
                                      double v_pp_abs, double mass_energy, double b_nm,
                                      double v_w, double omega0, double delta_nu_hz,
                                      double x_offset_nm = 1.0);

// Convenience overload: geometry and curvature taken from the model.
DecayProfileParams transition_numbers(const pot::SmoothDoubleBarrier& model, double e_star,
                                      double gamma_star, double delta_nu_hz,
                                      double x_offset_nm = 1.0);

// Retarded exponential amplitude (front at t = (x-b)/v*).
cplx exp_amplitude(const DecayProfileParams& p, const WavePacket& wp, double b_nm, double x_nm,
                   double t_s);
// Saddle-point power-law amplitude.
cplx power_amplitude(const DecayProfileParams& p, const WavePacket& wp, const pot::BarrierTop& bt,
                     double mass_energy, double x_nm, double t_s);

// P(t) = |e^{-G t/2 - i E* t} + e^{-i pi/4} e^{-i Es t} e^{-Y/2}/(G t)|^2,
// normalized to the exponential term at t -> 0+. Columns: P, exp-only,
// power-only.
struct ProfilePoint {
    double t, P, exp_only, power_only;
};
std::vector<ProfilePoint> combined_profile(const DecayProfileParams& p,
                                           const std::vector<double>& t_grid,
                                           bool power_enabled = true,
                                           bool interference_shift = false);

// Power-law fit p-hat and the Markov (pure-exponential) ratio defect on
// [t1, t2] of a survival series.
struct MarkovStats {
    double p_hat;          // fitted power ln P = -p ln(t - t_p) + c
    double p_resid;        // rms residual of that fit (large -> power law rejected)
    double markov_defect;  // spread of the local decay rate (0 for pure exponential)
};
MarkovStats markov_ratio_test(const std::vector<ProfilePoint>& series, double t1, double t2,
                              double t_p);

}  // namespace qdt::dpf
