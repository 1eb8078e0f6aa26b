#include "qdt/decayprofile.hpp"

#include <cmath>
#include <numbers>

namespace qdt::dpf {

namespace {
constexpr double pi = std::numbers::pi;
}

double wavepacket_factor(const WavePacket& wp, double E, double gamma_star) {
    const double dw = wp.delta_omega();
    const double d = E - wp.e_center;
    return dw * dw / 4.0 / (d * d + dw * dw / 4.0 + gamma_star * gamma_star / 4.0);
}

double wavepacket_ratio(const WavePacket& wp, double e_star, double e_saddle, double gamma_star) {
    const double dw = wp.delta_omega();
    const double d = e_saddle - e_star;
    const double c = 1.0 + 4.0 * d * d / (dw * dw + gamma_star * gamma_star);
    return dw * dw * c * c;
}

SaddleData saddle(const pot::BarrierTop& bt, double mass_energy, double x, double t_s) {
    if (!(t_s > 0.0)) throw std::domain_error("saddle: t must be > 0");
    const double dx = x - bt.x_max;
    const double ct = phys::speed_of_light_nm_s * t_s;  // nm
    SaddleData s;
    s.shift = mass_energy / 8.0 * (dx / ct) * (dx / ct);
    s.e_s = bt.v_max - 0.5 * std::abs(bt.v_pp) * dx * dx + s.shift;
    const double t_ev = t_s / phys::hbar_ev_s;
    const double x_ev = dx / phys::hbar_c;
    const double d2 = 4.0 * t_ev * t_ev * t_ev / (mass_energy * x_ev * x_ev);
    s.gauss_width = 1.0 / std::sqrt(d2);
    return s;
}

double solve_xi(double Y) {
    const double y_min = 2.0 - 2.0 * std::log(2.0);
    if (Y <= y_min)
        throw std::domain_error("solve_xi: Y <= 2 - 2 ln 2, no upper-branch root (power-law "
                                "onset inside the exponential era)");
    double xi = Y + 2.0 * std::log(std::max(Y, 3.0));
    for (int it = 0; it < 60; ++it) {
        const double f = xi - 2.0 * std::log(xi) - Y;
        const double fp = 1.0 - 2.0 / xi;
        const double step = f / fp;
        xi -= step;
        if (xi < 2.0) xi = 2.0 + 1e-12;
        if (std::abs(step) < 1e-14 * xi) break;
    }
    return xi;
}

DecayProfileParams transition_numbers(double e_star, double gamma_star, double v_max,
                                      double v_pp_abs, double mass_energy, double b_nm,
                                      double v_w, double omega0, double delta_nu_hz,
                                      double x_offset_nm) {
    if (!(e_star < v_max)) throw std::domain_error("transition_numbers: E* must lie below V_max");
    DecayProfileParams p{};
    p.e_star = e_star;
    p.gamma_star = gamma_star;
    p.omega0 = omega0;
    p.k_star = std::sqrt(2.0 * mass_energy * e_star) / phys::hbar_c;
    p.x_offset = x_offset_nm;
    p.delta_omega = 2.0 * pi * delta_nu_hz * phys::hbar_ev_s;
    p.X = 8.0 * pi * std::sqrt(mass_energy / v_pp_abs) * (v_max - e_star) / phys::hbar_c;
    p.Y = p.X - 26.86 +
          std::log(b_nm / x_offset_nm * (delta_nu_hz / 1e9) *
                   std::sqrt(10.0 / v_w * 1.0 / e_star));
    p.xi = solve_xi(p.Y);
    p.t_p = p.xi * phys::hbar_ev_s / gamma_star;
    p.remnant = std::exp(-p.xi);
    p.e_saddle = e_star;
    return p;
}

DecayProfileParams transition_numbers(const pot::SmoothDoubleBarrier& model, double e_star,
                                      double gamma_star, double delta_nu_hz, double x_offset_nm) {
    const pot::BarrierTop bt = pot::barrier_top(model);
    const pot::HarmonicFit hf = pot::harmonic_fit(model);
    return transition_numbers(e_star, gamma_star, bt.v_max, std::abs(bt.v_pp),
                              model.mass_energy(), model.b(), model.v_w(), hf.omega0,
                              delta_nu_hz, x_offset_nm);
}

cplx exp_amplitude(const DecayProfileParams& p, const WavePacket& wp, double b_nm, double x_nm,
                   double t_s) {
    const double rate = p.gamma_star / phys::hbar_ev_s;
    const double mass_energy = p.k_star * p.k_star * phys::hbar_c * phys::hbar_c /
                               (2.0 * p.e_star);
    const double v = std::sqrt(2.0 * p.e_star / mass_energy) * phys::speed_of_light_nm_s;
    const double t_front = (x_nm - b_nm) / v;
    if (t_s < t_front) return 0.0;
    const double f = wavepacket_factor(wp, p.e_star, p.gamma_star);
    const double amp = f * p.delta_omega / (std::sqrt(2.0) * std::sqrt(p.k_star)) *
                       std::sqrt(p.gamma_star / p.omega0);
    const double phase = p.k_star * (x_nm - b_nm) - p.e_star * t_s / phys::hbar_ev_s;
    return amp * std::exp(cplx(-0.5 * rate * (t_s - t_front), phase));
}

cplx power_amplitude(const DecayProfileParams& p, const WavePacket& wp, const pot::BarrierTop& bt,
                     double mass_energy, double x_nm, double t_s) {
    if (!(t_s > 0.0)) throw std::domain_error("power_amplitude: t must be > 0");
    // the saddle energy stays pinned at e_saddle (E* by default; its drift is
    // sub-neV at the times where this formula applies)
    const double e_s = p.e_saddle;
    const double f = wavepacket_factor(wp, e_s, p.gamma_star);
    const double dx = x_nm - bt.x_max;
    const double pen = std::exp(-2.0 * pi * std::sqrt(mass_energy / std::abs(bt.v_pp)) *
                                (bt.v_max - e_s) / phys::hbar_c);
    const double t_ev = t_s / phys::hbar_ev_s;
    const double u = std::pow(mass_energy * std::abs(bt.v_pp), 0.25) / std::sqrt(phys::hbar_c) * dx;
    const double au2 = 2.0 * std::sqrt(mass_energy / std::abs(bt.v_pp)) *
                       std::max(bt.v_max - e_s, 0.0) / phys::hbar_c;
    const double w0 = 0.5 * u * std::sqrt(std::max(u * u - au2, 0.0)) - e_s * t_ev;
    const double amp = std::sqrt(pi / 2.0) * f * std::sqrt(dx) / t_ev * pen;
    return amp * std::exp(cplx(0.0, w0 - pi / 4.0));
}

std::vector<ProfilePoint> combined_profile(const DecayProfileParams& p,
                                           const std::vector<double>& t_grid, bool power_enabled,
                                           bool interference_shift) {
    std::vector<ProfilePoint> out;
    out.reserve(t_grid.size());
    const double rate = p.gamma_star / phys::hbar_ev_s;
    const double coeff = std::exp(-p.Y / 2.0);
    const double e_s = interference_shift ? p.e_saddle : p.e_star;
    double prev = -1.0;
    for (const double t : t_grid) {
        if (!(t > 0.0) || t <= prev)
            throw std::domain_error("combined_profile: t grid must be positive increasing");
        prev = t;
        const double gt = rate * t;
        const cplx ae = std::exp(cplx(-0.5 * gt, -p.e_star * t / phys::hbar_ev_s));
        const cplx ap = power_enabled
                            ? std::exp(cplx(0.0, -pi / 4.0 - e_s * t / phys::hbar_ev_s)) *
                                  (coeff / gt)
                            : cplx(0.0);
        ProfilePoint pt;
        pt.t = t;
        pt.P = std::norm(ae + ap);
        pt.exp_only = std::exp(-gt);
        pt.power_only = coeff * coeff / (gt * gt);
        out.push_back(pt);
    }
    return out;
}

MarkovStats markov_ratio_test(const std::vector<ProfilePoint>& series, double t1, double t2,
                              double t_p) {
    std::vector<double> lt, lp, rloc;
    for (size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        if (s.t < t1 || s.t > t2) continue;
        if (!(s.P > 0.0)) throw std::domain_error("markov_ratio_test: non-positive P");
        if (s.t <= t_p) continue;
        lt.push_back(std::log(s.t - t_p));
        lp.push_back(std::log(s.P));
    }
    if (lt.size() < 4) throw std::domain_error("markov_ratio_test: too few points in window");
    // least squares ln P = -p ln(t - t_p) + c
    const size_t n = lt.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += lt[i]; sy += lp[i]; sxx += lt[i] * lt[i]; sxy += lt[i] * lp[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / n;
    MarkovStats ms;
    ms.p_hat = -slope;
    double rr = 0.0;
    for (size_t i = 0; i < n; ++i) rr += std::pow(lp[i] - slope * lt[i] - icpt, 2);
    ms.p_resid = std::sqrt(rr / n);
    // exponential hypothesis: local decay rate d ln P/dt should be constant
    double rmin = 1e300, rmax = -1e300, rsum = 0;
    size_t cnt = 0;
    const std::vector<ProfilePoint>& s = series;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i].t < t1 || s[i + 1].t > t2) continue;
        const double r = std::log(s[i].P / s[i + 1].P) / (s[i + 1].t - s[i].t);
        rmin = std::min(rmin, r); rmax = std::max(rmax, r);
        rsum += std::abs(r);
        ++cnt;
    }
    ms.markov_defect = cnt ? (rmax - rmin) / std::max(rsum / cnt, 1e-300) : 0.0;
    return ms;
}

}  // namespace qdt::dpf
