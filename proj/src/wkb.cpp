#include "qdt/wkb.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qdt/numerics.hpp"

namespace qdt::wkb {

namespace {

constexpr double pi = std::numbers::pi;

// integral of sqrt(2m|E - V|)/hbar_c between two turning points, with the
// sqrt endpoint singularity removed by x = tp -+ s^2 on each half.
double action_between(const pot::PotentialModel& p, double E, double xa, double xb, bool under) {
    const double m = p.mass_energy();
    const auto f = [&](double x) {
        const double d = under ? (p.eval(x) - E) : (E - p.eval(x));
        return std::sqrt(2.0 * m * std::max(d, 0.0)) / phys::hbar_c;
    };
    const double mid = 0.5 * (xa + xb);
    // left half: x = xa + s^2, dx = 2 s ds
    const double sl = std::sqrt(mid - xa);
    const double left =
        num::integrate([&](double s) { return f(xa + s * s) * 2.0 * s; }, 0.0, sl, 1e-10);
    // right half: x = xb - s^2
    const double sr = std::sqrt(xb - mid);
    const double right =
        num::integrate([&](double s) { return f(xb - s * s) * 2.0 * s; }, 0.0, sr, 1e-10);
    return left + right;
}

}  // namespace

ActionPair actions(const pot::PotentialModel& p, double E) {
    const auto tps = pot::turning_points(p, E);
    ActionPair ap;
    if (tps.size() == 4) {
        ap.L = action_between(p, E, tps[1], tps[2], false);
        ap.theta = std::exp(action_between(p, E, tps[2], tps[3], true));
    } else if (tps.size() == 2) {
        // bound energy: the forbidden region extends to the boundary
        ap.L = action_between(p, E, tps[0], tps[1], false);
        ap.theta = std::numeric_limits<double>::infinity();
    } else {
        throw pot::ShapeError("actions: expected two or four turning points at this energy");
    }
    return ap;
}

namespace {
// Well action from the innermost turning-point pair around x = 0; tolerant of
// stray near-degenerate roots close to the barrier top.
double well_action_lenient(const pot::PotentialModel& p, double E) {
    const auto tps = pot::turning_points(p, E);
    double lo = 0.0, hi = 0.0;
    bool found_lo = false, found_hi = false;
    for (const double r : tps) {
        if (r < 0.0) {
            lo = r;
            found_lo = true;
        } else if (!found_hi) {
            hi = r;
            found_hi = true;
        }
    }
    if (!found_lo || !found_hi) throw pot::ShapeError("well_action: no well at this energy");
    const double m = p.mass_energy();
    const auto f = [&](double x) {
        return std::sqrt(2.0 * m * std::max(E - p.eval(x), 0.0)) / phys::hbar_c;
    };
    const double mid = 0.5 * (lo + hi);
    const double sl = std::sqrt(mid - lo), sr = std::sqrt(hi - mid);
    return num::integrate([&](double s) { return f(lo + s * s) * 2.0 * s; }, 0.0, sl, 1e-10) +
           num::integrate([&](double s) { return f(hi - s * s) * 2.0 * s; }, 0.0, sr, 1e-10);
}
}  // namespace

std::vector<Resonance> bohr_sommerfeld_levels(const pot::PotentialModel& p, int n_min, int n_max,
                                              double e_max, double omega0_hint) {
    const double v_min = p.eval(0.0);
    bool have_barrier = true;
    double v_top = e_max;
    try {
        const pot::BarrierTop bt = pot::barrier_top(p);
        if (std::isnan(e_max)) v_top = bt.v_max;
    } catch (const pot::ShapeError&) {
        have_barrier = false;
        if (std::isnan(e_max)) {
            // flat-topped barriers (piecewise models): scan for the highest V
            v_top = v_min;
            for (double x = 0.05; x <= 100.0; x += 0.05) v_top = std::max(v_top, p.eval(x));
        }
    }
    const auto L_of = [&](double E) { return well_action_lenient(p, E); };

    std::vector<Resonance> out;
    double e_lo = v_min + 1e-9;
    // just below the top the well walls hide in tangent dips narrower than
    // the turning-point scan; probe a resolvable notch below it
    const double e_top = v_top - std::max(1e-9, 1e-3 * (v_top - v_min));
    for (int n = n_min; n <= n_max; ++n) {
        const double target = (n + 0.5) * pi;
        if (L_of(e_top) - target < 0.0) {
            Resonance r{n, 0.0, 0.0, (n % 2 == 0) ? +1 : -1, Source::semiclassical, true};
            out.push_back(r);
            continue;
        }
        double lo = e_lo;
        if (L_of(lo) - target > 0.0) lo = v_min + 1e-12;
        const double E = num::brent([&](double e) { return L_of(e) - target; }, lo, e_top,
                                    1e-10);
        Resonance r{n, E, 0.0, (n % 2 == 0) ? +1 : -1, Source::semiclassical, false};
        if (E > 0.0 && have_barrier) {
            const double om = omega0_hint > 0.0
                                  ? omega0_hint
                                  : phys::hbar_c * std::sqrt(std::max(p.deriv2(0.0), 0.0) /
                                                             p.mass_energy());
            r.width = width_semiclassical(p, E, om);
        }
        out.push_back(r);
        e_lo = E;  // levels are ordered
    }
    return out;
}

double theta2_parabolic(const pot::BarrierTop& bt, double mass_energy, double E) {
    const double au2 = 2.0 * std::sqrt(mass_energy / std::abs(bt.v_pp)) * (bt.v_max - E) /
                       phys::hbar_c;
    return std::exp(-2.0 * pi * au2);
}

double width_rectangular(double b_nm, double mass_energy, double theta) {
    return phys::hbar_c * phys::hbar_c / (4.0 * mass_energy * b_nm * b_nm * theta * theta);
}

double width_semiclassical(const pot::PotentialModel& p, double E_n, double omega0,
                           bool use_quadrature_theta) {
    const pot::BarrierTop bt = pot::barrier_top(p);
    if (E_n >= bt.v_max) throw std::domain_error("width_semiclassical: E above barrier");
    double t2inv;
    if (use_quadrature_theta) {
        const double th = actions(p, E_n).theta;
        t2inv = 1.0 / (th * th);
    } else {
        t2inv = theta2_parabolic(bt, p.mass_energy(), E_n);
    }
    return omega0 / pi * t2inv;
}

ConnectionMatrices connection_matrix(double theta, double L) {
    const double pd = theta + 1.0 / (4.0 * theta);   // (2 th + 1/2th)/2
    const double qd = theta - 1.0 / (4.0 * theta);   // (2 th - 1/2th)/2
    const cplx i(0.0, 1.0);
    ConnectionMatrices cm;
    cm.well_to_right << pd, -i * qd, i * qd, pd;
    const cplx eL = std::exp(i * L), emL = std::exp(-i * L);
    cm.well_to_left << pd * eL, i * qd * eL, -i * qd * emL, pd * emL;
    const double t2 = 4.0 * theta * theta;
    cm.residual = (t2 + 1.0 / t2) * std::cos(L) - 2.0 * i * std::sin(L);
    cm.f_over_j = -i * (t2 - 1.0 / t2) * std::cos(L) +
                  2.0 * (t2 - 1.0 / t2) / (t2 + 1.0 / t2) * std::sin(L);
    return cm;
}

BarrierWaveParams barrier_wave_params(const pot::BarrierTop& bt, double mass_energy, double E,
                                      double x) {
    BarrierWaveParams bp;
    const double vpp = std::abs(bt.v_pp);
    bp.a_u = std::sqrt(2.0 * std::sqrt(mass_energy / vpp) * std::max(bt.v_max - E, 0.0) /
                       phys::hbar_c);
    bp.u = std::pow(mass_energy * vpp, 0.25) / std::sqrt(phys::hbar_c) * (x - bt.x_max);
    return bp;
}

cplx barrier_wave_modified(const pot::BarrierTop& bt, double mass_energy, double E, double x) {
    const BarrierWaveParams bp = barrier_wave_params(bt, mass_energy, E, x);
    const double au2 = bp.a_u * bp.a_u, u = bp.u;
    if (!(u * u > au2))
        throw std::domain_error("barrier_wave_modified: u^2 <= a_u^2 (inside the barrier)");
    const double amp = std::pow(mass_energy * std::abs(bt.v_pp), -0.125) * std::exp(-pi * au2) /
                       std::pow(u * u - au2, 0.25);
    const double phase = 0.5 * (u * std::sqrt(u * u - au2) + au2 * std::log(u * u));
    return amp * std::exp(cplx(0.0, phase));
}

}  // namespace qdt::wkb
