#pragma once

#include <vector>

#include "qdt/potentials.hpp"

// Woods-Saxon + Coulomb alpha tunneling: penetration factor, paper-style
// transition-time estimate and the mass-number scan.
namespace qdt::alp {

struct AlphaSystem {
    int A = 212, Z = 84, N = 128;
    double q_mev = 8.78;        // alpha kinetic energy
    double detection_r_m = 0.1;
    AlphaSystem() = default;
    AlphaSystem(int A_, int Z_, int N_, double q, double r) : A(A_), Z(Z_), N(N_), q_mev(q),
                                                              detection_r_m(r) {
        if (A != Z + N) throw std::domain_error("AlphaSystem: A != Z + N");
        if (!(q > 0.0)) throw std::domain_error("AlphaSystem: Q must be > 0");
    }
};

struct Penetration {
    double theta2_inv;   // e^{-2 int kappa}
    double exponent;     // 2 int kappa
    double r1, r2;       // classical turning points (fm)
    double v_m;          // barrier maximum (MeV)
    double r_m;          // barrier position (fm)
    double gamma_mev;    // width from theta^-2 = 4 M R^2 Gamma
    double lifetime_s;
};

struct AlphaTransition {
    double v_m;          // MeV
    double xi;           // Gamma T
    double remnant;      // e^{-xi}
    double theta2;       // penetration theta^2
    double rhs;          // right-hand side of xi - 2 ln xi = rhs
    double delta_e_mev;  // packet width used
};

// Barrier penetration of V_alpha at E = Q between the classical turning
// points (the printed -R..R limits are replaced by the turning points).
Penetration penetration(const AlphaSystem& sys);

// xi - 2 ln xi = ln(pi r / (2 v(V_m) M R^2)) + 2 ln(1 + 4 (V_m - Q)^2 / dE^2).
AlphaTransition transition_estimate(const AlphaSystem& sys, double delta_e_mev);

// Packet width that reproduces a target xi at the system's detection radius.
double calibrate_delta_e(const AlphaSystem& sys, double xi_target = 40.56);

// RHS of the transition equation (exactly additive in ln r).
double transition_rhs(const AlphaSystem& sys, double delta_e_mev);

struct MassScanRow {
    int A;
    double xi;
    double rhs;
};
// xi(A) with only the M R^2 term varying (R = 1.27 A^{1/3}); v(V_m) and the
// packet ratio are held at the base system. Also reports d xi / d ln A.
struct MassScan {
    std::vector<MassScanRow> rows;
    double slope_dxi_dlnA;
};
MassScan mass_number_scan(const AlphaSystem& base, const std::vector<int>& a_list,
                          double delta_e_mev);

}  // namespace qdt::alp
