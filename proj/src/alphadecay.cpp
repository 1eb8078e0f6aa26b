#include "qdt/alphadecay.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qdt/decayprofile.hpp"
#include "qdt/numerics.hpp"

namespace qdt::alp {

namespace {
constexpr double pi = std::numbers::pi;

pot::AlphaNucleusPotential make_pot(const AlphaSystem& s) {
    return pot::AlphaNucleusPotential(s.A, s.Z, s.N);
}

struct Barrier {
    double r_m, v_m;
};

Barrier barrier_max(const pot::AlphaNucleusPotential& p) {
    const double r = num::golden_min([&](double x) { return -p.total(x); }, 0.8 * p.radius(),
                                     3.0 * p.radius(), 1e-12);
    return {r, p.total(r)};
}
}  // namespace

Penetration penetration(const AlphaSystem& sys) {
    const auto p = make_pot(sys);
    const Barrier bm = barrier_max(p);
    if (sys.q_mev >= bm.v_m)
        throw std::domain_error("penetration: Q at or above the barrier maximum");
    const double Q = sys.q_mev;
    if (p.total(0.05 * p.radius()) >= Q)
        throw std::domain_error("penetration: no interior classical region at this Q");
    const double r1 = num::brent([&](double r) { return p.total(r) - Q; }, 0.05 * p.radius(),
                                 bm.r_m, 1e-12);
    const double r2 = num::brent([&](double r) { return p.total(r) - Q; }, bm.r_m, 3000.0, 1e-12);
    const double M = phys::alpha_mass;
    // sqrt endpoint singularities removed by r = tp -+ s^2
    const auto kap = [&](double r) {
        return std::sqrt(2.0 * M * std::max(p.total(r) - Q, 0.0)) / phys::hbar_c;
    };
    const double mid = 0.5 * (r1 + r2);
    const double sl = std::sqrt(mid - r1), sr = std::sqrt(r2 - mid);
    const double act =
        num::integrate([&](double s) { return kap(r1 + s * s) * 2.0 * s; }, 0.0, sl, 1e-11) +
        num::integrate([&](double s) { return kap(r2 - s * s) * 2.0 * s; }, 0.0, sr, 1e-11);
    Penetration out;
    out.exponent = 2.0 * act;
    out.theta2_inv = std::exp(-2.0 * act);
    out.r1 = r1;
    out.r2 = r2;
    out.v_m = bm.v_m;
    out.r_m = bm.r_m;
    const double R = p.radius();
    out.gamma_mev = out.theta2_inv * phys::hbar_c * phys::hbar_c / (4.0 * M * R * R);
    out.lifetime_s = phys::hbar_ev_s * 1e-6 / out.gamma_mev;
    return out;
}

double transition_rhs(const AlphaSystem& sys, double delta_e_mev) {
    const auto p = make_pot(sys);
    const Barrier bm = barrier_max(p);
    const double M = phys::alpha_mass;
    const double v = std::sqrt(2.0 * bm.v_m / M);              // units of c
    const double M_fm = M / phys::hbar_c;                      // 1/fm
    const double r_fm = sys.detection_r_m * 1e15;
    const double fr = 1.0 + 4.0 * std::pow(bm.v_m - sys.q_mev, 2) / (delta_e_mev * delta_e_mev);
    return std::log(pi * r_fm / (2.0 * v * M_fm * p.radius() * p.radius())) + 2.0 * std::log(fr);
}

AlphaTransition transition_estimate(const AlphaSystem& sys, double delta_e_mev) {
    if (!(sys.detection_r_m > 0.0)) throw std::domain_error("transition_estimate: r <= 0");
    if (!(delta_e_mev > 0.0)) throw std::domain_error("transition_estimate: Delta E <= 0");
    const auto p = make_pot(sys);
    const Barrier bm = barrier_max(p);
    AlphaTransition tr;
    tr.v_m = bm.v_m;
    tr.delta_e_mev = delta_e_mev;
    tr.rhs = transition_rhs(sys, delta_e_mev);
    tr.xi = dpf::solve_xi(tr.rhs);
    tr.remnant = std::exp(-tr.xi);
    // the transition numbers stand on their own; theta^2 only exists when the
    // system actually has a quasibound state at this Q
    try {
        tr.theta2 = 1.0 / penetration(sys).theta2_inv;
    } catch (const std::domain_error&) {
        tr.theta2 = std::numeric_limits<double>::quiet_NaN();
    }
    return tr;
}

double calibrate_delta_e(const AlphaSystem& sys, double xi_target) {
    const double target_rhs = xi_target - 2.0 * std::log(xi_target);
    const auto p = make_pot(sys);
    const Barrier bm = barrier_max(p);
    const double base = transition_rhs(sys, 1e30);  // packet ratio -> 1
    const double extra = target_rhs - base;
    if (!(extra > 0.0))
        throw std::domain_error("calibrate_delta_e: target below the geometric term");
    const double fr = std::exp(0.5 * extra);
    return 2.0 * (bm.v_m - sys.q_mev) / std::sqrt(fr - 1.0);
}

MassScan mass_number_scan(const AlphaSystem& base, const std::vector<int>& a_list,
                          double delta_e_mev) {
    if (a_list.empty()) throw std::domain_error("mass_number_scan: empty A list");
    MassScan scan;
    const double rhs_base = transition_rhs(base, delta_e_mev);
    const double R_base = pot::AlphaNucleusPotential(base.A, base.Z, base.N).radius();
    for (const int A : a_list) {
        const double R = 1.27 * std::cbrt(static_cast<double>(A));
        const double rhs = rhs_base - 2.0 * std::log(R / R_base);
        MassScanRow row{A, dpf::solve_xi(rhs), rhs};
        scan.rows.push_back(row);
    }
    // local slope around the base A
    const double lnA = std::log(static_cast<double>(base.A));
    const auto xi_of = [&](double lA) {
        const double rhs = rhs_base - 2.0 / 3.0 * (lA - lnA);
        return dpf::solve_xi(rhs);
    };
    const double dl = 0.01;
    scan.slope_dxi_dlnA = (xi_of(lnA + dl) - xi_of(lnA - dl)) / (2.0 * dl);
    return scan;
}

}  // namespace qdt::alp
