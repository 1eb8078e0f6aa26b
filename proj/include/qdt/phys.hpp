#pragma once

#include <cmath>
#include <stdexcept>

// Physical constants (CODATA 2018) and the handful of unit restorations the
// code needs. Everything runs in eV/nm for the dot sector and MeV/fm for the
// nuclear sector; hbar*c has the same numeric value in both, so the kinematic
// helpers below work unchanged in either system as long as energies and
// masses are passed consistently.
namespace qdt::phys {

inline constexpr double hbar_c = 197.3269804;         // eV nm == MeV fm
inline constexpr double electron_mass = 510998.95;    // eV
inline constexpr double alpha_mass = 3727.3794066;    // MeV
inline constexpr double fine_structure = 7.2973525693e-3;
inline constexpr double hbar_ev_s = 6.582119569e-16;  // eV s
inline constexpr double coulomb_e2 = fine_structure * hbar_c;  // alpha*hbar*c, MeV fm (or eV nm)
inline constexpr double eps0_c = 8.8541878128e-12 * 2.99792458e8;  // SI, for laser intensity
inline constexpr double speed_of_light_nm_s = 2.99792458e17;       // nm/s

inline constexpr double ev_to_mev(double ev) { return ev * 1e-6; }
inline constexpr double mev_to_ev(double mev) { return mev * 1e6; }
inline constexpr double nm_to_fm(double nm) { return nm * 1e6; }
inline constexpr double fm_to_nm(double fm) { return fm * 1e-6; }

struct EffectiveMass {
    double ratio_to_electron = 0.1;
    explicit EffectiveMass(double r = 0.1) : ratio_to_electron(r) {
        if (!(r > 0.0)) throw std::domain_error("EffectiveMass: ratio must be > 0");
    }
    double energy() const { return ratio_to_electron * electron_mass; }  // eV
};

// k = sqrt(2 m (E - V)) / hbar_c.  E, V and mc2 in the same energy unit;
// result in the matching inverse length (nm^-1 for eV, fm^-1 for MeV).
inline double k_of_E(double E, double V, double mc2) {
    if (E < V) throw std::domain_error("k_of_E: E < V, use kappa_of_E");
    return std::sqrt(2.0 * mc2 * (E - V)) / hbar_c;
}
inline double k_of_E(double E, double V, const EffectiveMass& m) {
    return k_of_E(E, V, m.energy());
}

// Imaginary momentum under a barrier.
inline double kappa_of_E(double E, double V, double mc2) {
    if (E > V) throw std::domain_error("kappa_of_E: E > V, use k_of_E");
    return std::sqrt(2.0 * mc2 * (V - E)) / hbar_c;
}

// Width (eV) -> decay rate (1/s).
inline double rate_from_width(double gamma_ev) {
    if (gamma_ev < 0.0) throw std::domain_error("rate_from_width: Gamma < 0");
    return gamma_ev / hbar_ev_s;
}
inline double lifetime_from_width(double gamma_ev) {
    return hbar_ev_s / gamma_ev;
}

// Energy (eV) -> angular frequency (1/s) and back.
inline double omega_from_energy(double e_ev) { return e_ev / hbar_ev_s; }
inline double energy_from_omega(double w_per_s) { return w_per_s * hbar_ev_s; }

}  // namespace qdt::phys
