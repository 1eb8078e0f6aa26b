#pragma once

#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "qdt/potentials.hpp"

// Semiclassical machinery: action integrals, Bohr-Sommerfeld levels,
// penetration widths, barrier connection matrices and the modified barrier
// wave with the ln u^2 phase.
namespace qdt::wkb {

using cplx = std::complex<double>;

struct ActionPair {
    double L;      // well action, dimensionless
    double theta;  // exp of the barrier action, >= 1
};

enum class Source { semiclassical, exact };

struct Resonance {
    int n;
    double energy;       // eV
    double width;        // eV (0 for bound)
    int parity;          // +1 / -1
    Source source;
    bool above_barrier;  // flagged instead of widths when E > V_max
};

struct BarrierWaveParams {
    double a_u;  // dimensionless turning-point coordinate
    double u;    // scaled coordinate (m |V''|)^(1/4) (x - x_max)
};

// L = int_{-a}^{a} k и theta = exp int_a^b kappa at energy E; the sqrt
// endpoint singularities are removed by the x = tp +- s^2 substitution.
ActionPair actions(const pot::PotentialModel& p, double E);

// Roots of L(E) = (n + 1/2) pi between the well bottom and e_max (the barrier
// top when e_max is NaN); widths from width_semiclassical. Levels above the
// top are flagged rather than given widths.
std::vector<Resonance> bohr_sommerfeld_levels(
    const pot::PotentialModel& p, int n_min, int n_max,
    double e_max = std::numeric_limits<double>::quiet_NaN(), double omega0_hint = 0.0);

// Gamma_n = (omega0/pi) theta^-2 with the parabolic-top exponent
// theta^-2 = exp[-4 pi sqrt(m/|V''|) (V_max - E)]; set use_quadrature_theta to
// replace the exponent with the actual barrier action integral.
double width_semiclassical(const pot::PotentialModel& p, double E_n, double omega0,
                           bool use_quadrature_theta = false);

// Parabolic-top penetration exponent theta^{-2} = e^{-2 pi a_u^2(E)}.
double theta2_parabolic(const pot::BarrierTop& bt, double mass_energy, double E);

// Rectangular-well width Gamma = 1/(4 m b^2 theta^2), hbar restored (eV).
double width_rectangular(double b_nm, double mass_energy, double theta);

struct ConnectionMatrices {
    Eigen::Matrix2cd well_to_right;  // (A,B) = M (F,G)
    Eigen::Matrix2cd well_to_left;   // (A,B) = M (H,J)
    cplx residual;                   // (4 th^2 + 1/(4 th^2)) cos L - 2 i sin L
    cplx f_over_j;                   // outgoing-amplitude ratio near resonance
};

ConnectionMatrices connection_matrix(double theta, double L);

// Modified semiclassical barrier wave for u^2 > a_u^2:
// psi_b = (m|V''|)^{-1/8} e^{-pi a_u^2} (u^2-a_u^2)^{-1/4}
//         exp[(i/2)(u sqrt(u^2-a_u^2) + a_u^2 ln u^2)].
cplx barrier_wave_modified(const pot::BarrierTop& bt, double mass_energy, double E, double x);

// a_u^2 = 2 sqrt(m/|V''|) (V_max - E), scaled coordinate helpers.
BarrierWaveParams barrier_wave_params(const pot::BarrierTop& bt, double mass_energy, double E,
                                      double x);

}  // namespace qdt::wkb
