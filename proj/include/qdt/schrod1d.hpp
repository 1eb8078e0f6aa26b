#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qdt/potentials.hpp"

// Grid-based exact solver: Numerov bound states, transmission scans with an
// outgoing right boundary, Breit-Wigner resonance fits, quasi-bound wave
// functions, dipole elements and radiative rates, plus the Airy-matched
// partially-linear-potential machinery.
namespace qdt::sch {

using cplx = std::complex<double>;

struct Grid {
    double x_min, x_max;
    int n_points;
    Grid(double a, double b, int n) : x_min(a), x_max(b), n_points(n) {
        if (!(b > a) || n < 16) throw std::domain_error("Grid: bad bounds or size");
    }
    double h() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + i * h(); }
    Eigen::ArrayXd coords() const;
};

struct BoundState {
    int n;                 // node count
    double energy;         // eV
    Eigen::ArrayXd psi;    // normalized on the grid
    int parity;            // +1/-1 (symmetric potentials)
};

struct TransmissionPoint {
    double E, T, R;
};

struct FittedResonance {
    double E_r;            // eV
    double gamma;          // eV (double-barrier transmission width)
    double peak_T;
    double residual;       // rms of the Breit-Wigner fit
    // The transmission width describes double-barrier passage; single-barrier
    // resonance decay after excitation carries half of it.
    double gamma_single() const { return 0.5 * gamma; }
};

// Bound spectrum in (E_lo, E_hi), E_hi <= 0. Numerov shooting from both ends
// with a Wronskian match at an interior point; eigenvalues to ~1e-8 eV.
std::vector<BoundState> bound_states(const pot::PotentialModel& p, const Grid& g, double E_lo,
                                     double E_hi);

// T(E), R(E) for E > 0: Numerov from the right with a pure outgoing wave,
// plane-wave decomposition (with the Numerov lattice wavenumber) at far left.
TransmissionPoint transmission(const pot::PotentialModel& p, const Grid& g, double E);
std::vector<TransmissionPoint> transmission_scan(const pot::PotentialModel& p, const Grid& g,
                                                 const std::vector<double>& energies);

// Locate the transmission peak inside [E_lo, E_hi] (golden search), refine
// until >= 20 points lie within +-2 Gamma, and least-squares fit a
// Breit-Wigner. Throws on non-convergence.
FittedResonance fit_resonance(const pot::PotentialModel& p, const Grid& g, double E_lo,
                              double E_hi);

// Breit-Wigner least squares on an existing scan window (one peak).
FittedResonance fit_breit_wigner(const std::vector<TransmissionPoint>& scan);

// Quasi-bound wave at a fitted resonance energy: parity shooting from x = 0,
// normalized over |x| <= outer turning point b(E).
struct ResonanceWave {
    double energy;
    int parity;
    double b_outer;        // normalization half-width (nm)
    Eigen::ArrayXd psi;    // on g, interior-normalized
    Eigen::ArrayXd x;
    int interior_nodes;
};
ResonanceWave resonance_wavefunction(const pot::PotentialModel& p, const Grid& g, double E_r,
                                     int parity);

// |int psi_i x psi_j dx| over |x| <= x_cut (nm); grids must match.
double dipole_element(const Eigen::ArrayXd& psi_i, const Eigen::ArrayXd& psi_j, const Grid& g,
                      double x_cut);

// E1 radiative rate (4/3) alpha omega^3 d^2 with hbar, c restored -> 1/s.
double e1_rate(double d_nm, double omega_ev);

// ------------------------------------------------- partially linear ramp --

// Outgoing Airy solution on the ramp a < x <= b and the parity matching
// residual at x = a. zeta > 0 in the classically allowed part of the ramp.
struct RampSolution {
    cplx value;        // C_i(x) = N (Ai(-zeta) - i Bi(-zeta)), outgoing
    cplx derivative;   // dC_i/dx
    double zeta;
};
RampSolution linear_ramp_wave(const pot::PartiallyLinearPotential& p, double E, double x);

// |k tan/cot matching - Airy log-derivative| over an energy grid; local
// minima approximate resonance positions. parity +1 matches the cosine
// (even) interior solution, -1 the sine (odd) one.
double linear_ramp_residual(const pot::PartiallyLinearPotential& p, double E, int parity);
std::vector<double> linear_ramp_resonances(const pot::PartiallyLinearPotential& p, double E_lo,
                                           double E_hi, int parity, int n_scan = 2000);

// Late-time saddle-point probability for the ramp potential observed at
// x > b: returns (E_s, gaussian width, |Psi|^2) at time t.
struct RampLateTime {
    double E_s;        // saddle energy (eV)
    double width;      // |d2Psi/dE2|^{-1/2} (eV)
    double prob;       // |Psi|^2 (arbitrary overall normalization)
};
RampLateTime linear_ramp_late_time(const pot::PartiallyLinearPotential& p, double x, double t_s);

}  // namespace qdt::sch
