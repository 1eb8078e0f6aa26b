#include "qdt/bloch3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdt::bl3 {

namespace {
constexpr double pi = std::numbers::pi;
using Vec5 = Eigen::Matrix<double, 5, 1>;
}

BlochDrive BlochDrive::make(DriveMode mode, double intensity, double dipole_e_nm,
                            double detuning_ev, double gamma12, double t1_s, double delta_s) {
    if (!(delta_s > 0.0)) throw std::domain_error("BlochDrive: Delta must be > 0");
    BlochDrive d;
    d.mode = mode;
    d.intensity_w_cm2 = intensity;
    d.dipole_e_nm = dipole_e_nm;
    d.detuning_ev = detuning_ev;
    d.gamma12 = gamma12;
    d.t1_s = t1_s;
    d.delta_s = delta_s;
    d.rabi0_ev = rabi0_from_intensity(intensity, dipole_e_nm);
    return d;
}

TunnelRate TunnelRate::make(double gamma_star_per_s, double k_star_nm, double x_offset_nm,
                            double e_star_ev, bool power_enabled, double knob) {
    TunnelRate tr;
    tr.gamma_star = gamma_star_per_s;
    tr.tau = 1.0 / gamma_star_per_s;
    tr.power_enabled = power_enabled;
    tr.beta_s = knob * pi * std::sqrt(k_star_nm * x_offset_nm) / (2.0 * e_star_ev) *
                phys::hbar_ev_s;
    return tr;
}

double field_from_intensity(double i_w_cm2) {
    if (i_w_cm2 < 0.0) throw std::domain_error("field_from_intensity: I < 0");
    return std::sqrt(2.0 * i_w_cm2 * 1e4 / phys::eps0_c);  // W/cm^2 -> W/m^2
}

double rabi0_from_intensity(double i_w_cm2, double dipole_e_nm) {
    return dipole_e_nm * 1e-9 * field_from_intensity(i_w_cm2);  // e nm * V/m -> eV
}

double rabi(const BlochDrive& d, double t_s) {
    if (d.mode == DriveMode::cw) return d.rabi0_ev;
    return 0.5 * d.rabi0_ev * (1.0 - 2.0 / pi * std::atan((t_s - d.t1_s) / d.delta_s));
}

double gamma_p(const TunnelRate& tr, double t_s) {
    if (t_s < 0.0) throw std::domain_error("gamma_p: t < 0");
    if (!tr.power_enabled) return tr.gamma_star;
    const double G = tr.gamma_star;
    const double A = std::exp(-0.5 * G * t_s);
    const double B = tr.beta_s / (t_s + tr.tau);
    const double num = G * A * A + 2.0 * B * B / (t_s + tr.tau) +
                       std::sqrt(2.0) * A * B * (0.5 * G + 1.0 / (t_s + tr.tau));
    const double den = A * A + B * B + std::sqrt(2.0) * A * B;
    return num / den;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Rhs {
    const BlochDrive* drive;
    const TunnelRate* tr;
    bool pauli;

    Vec5 operator()(double t, const Vec5& y) const {
        const double s11 = y[0], s22 = y[1];
        const cplx s12(y[3], y[4]);
        const double P = pauli ? (1.0 - s22) : 1.0;
        const double Gp = gamma_p(*tr, std::max(t, 0.0));
        const double Om = rabi(*drive, t) / phys::hbar_ev_s;      // 1/s
        const double dl = drive->detuning_ev / phys::hbar_ev_s;   // 1/s
        const double g = drive->gamma12;
        Vec5 dy;
        dy[0] = -Om * s12.imag() - Gp * s11 - g * s11 * P;
        dy[1] = Om * s12.imag() + g * s11 * P;
        dy[2] = Gp * s11;
        // the tunneling level's coherence damps at Gp/2 alongside its
        // population; without this term the populations can turn negative
        const cplx ds12 = cplx(0.0, dl) * s12 + cplx(0.0, 0.5 * Om) * (s11 - s22) -
                          0.5 * (g * P + Gp) * s12;
        dy[3] = ds12.real();
        dy[4] = ds12.imag();
        return dy;
    }
};

}  // namespace

std::vector<BlochState> integrate(const BlochState& y0, const BlochDrive& drive,
                                  const TunnelRate& tr, const std::vector<double>& t_out,
                                  double tol, bool pauli) {
    if (!(tol >= 1e-12 && tol <= 1e-6)) throw std::domain_error("integrate: tol out of range");
    if (t_out.empty()) return {};
    const Rhs rhs{&drive, &tr, pauli};

    // stop exactly on output times and on the drive switch window edges
    std::vector<double> stops = t_out;
    if (drive.mode == DriveMode::pulse) {
        stops.push_back(std::max(drive.t1_s - 10.0 * drive.delta_s, 0.0));
        stops.push_back(drive.t1_s + 10.0 * drive.delta_s);
    }
    std::sort(stops.begin(), stops.end());

    Vec5 y;
    y << y0.s11, y0.s22, y0.s33, y0.s12.real(), y0.s12.imag();
    double t = 0.0;
    const double h_init = 1e-3 / std::max({tr.gamma_star, drive.gamma12, 1.0});
    double h = h_init;
    double err_prev = 1.0;
    Vec5 k1 = rhs(t, y);
    std::vector<BlochState> out;
    out.reserve(t_out.size());
    size_t iout = 0;
    const double atol = tol * 1e-3;

    auto record_until = [&](double tcur) {
        while (iout < t_out.size() && t_out[iout] <= tcur + 1e-30) {
            BlochState s;
            s.s11 = y[0]; s.s22 = y[1]; s.s33 = y[2];
            s.s12 = cplx(y[3], y[4]);
            out.push_back(s);
            ++iout;
        }
    };
    record_until(0.0);

    const double edge_lo =
        drive.mode == DriveMode::pulse ? std::max(drive.t1_s - 10.0 * drive.delta_s, 0.0) : -1.0;
    const double edge_hi = drive.mode == DriveMode::pulse ? drive.t1_s + 10.0 * drive.delta_s : -1.0;

    size_t istop = 0;
    long steps = 0;
    while (iout < t_out.size()) {
        while (istop < stops.size() && stops[istop] <= t * (1.0 + 1e-14) + 1e-300) ++istop;
        const double t_next_stop = istop < stops.size() ? stops[istop] : t_out.back();
        const double htry = std::min(h, t_next_stop - t);
        const bool hit_stop = htry < h;

        const Vec5 k2 = rhs(t + c2 * htry, y + htry * a21 * k1);
        const Vec5 k3 = rhs(t + c3 * htry, y + htry * (a31 * k1 + a32 * k2));
        const Vec5 k4 = rhs(t + c4 * htry, y + htry * (a41 * k1 + a42 * k2 + a43 * k3));
        const Vec5 k5 =
            rhs(t + c5 * htry, y + htry * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Vec5 k6 =
            rhs(t + htry, y + htry * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Vec5 y5 = y + htry * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vec5 k7 = rhs(t + htry, y5);
        const Vec5 ev = htry * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double err = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double sc = atol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err += std::pow(ev[i] / sc, 2);
        }
        err = std::sqrt(err / 5.0);
        if (err <= 1.0) {
            t = hit_stop ? t_next_stop : t + htry;
            y = y5;
            k1 = k7;  // FSAL
            record_until(t);
            const double fac =
                0.9 * std::pow(std::max(err, 1e-10), -0.2) * std::pow(err_prev, 0.04);
            if (!hit_stop) h = htry * std::clamp(fac, 0.2, 5.0);
            err_prev = std::max(err, 1e-10);
            if (hit_stop && (t_next_stop == edge_lo || t_next_stop == edge_hi))
                h = std::min(h, std::max(0.01 * drive.delta_s, h_init));
        } else {
            h = htry * std::clamp(0.9 * std::pow(err, -0.25), 0.1, 0.9);
        }
        if (!(h > 1e-30 * std::max(t, 1e-12)) || !(htry > 0.0) || !std::isfinite(err))
            throw IntegrationError("integrate: step underflow (stiffness) at t = " +
                                   std::to_string(t));
        if (++steps > 200000000L) throw IntegrationError("integrate: step budget exceeded");
    }
    return out;
}

std::vector<SurvivalPoint> survival_under_drive(const BlochDrive& drive, const TunnelRate& tr,
                                                const std::vector<double>& t_out, double tol,
                                                bool pauli) {
    BlochState y0;  // filled bound state
    const auto states = integrate(y0, drive, tr, t_out, tol, pauli);
    std::vector<SurvivalPoint> out;
    out.reserve(states.size());
    for (size_t i = 0; i < states.size(); ++i)
        out.push_back({t_out[i], states[i], 1.0 - states[i].s33});
    return out;
}

double onset_time(const std::vector<SurvivalPoint>& series, double frac) {
    if (series.size() < 8) throw std::domain_error("onset_time: series too short");
    // the slow late tail is near-linear in ln t; the onset is where the curve
    // first joins that trend. Fit the last quarter of the log-time axis, then
    // report the first time the departure falls below frac of its maximum.
    const size_t n = series.size();
    const size_t i0 = n - std::max<size_t>(4, n / 4);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = i0; i < n; ++i) {
        const double x = std::log(series[i].t), y = series[i].survival;
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double m = static_cast<double>(n - i0);
    const double b = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double a = (sy - b * sx) / m;
    double dev_max = 0.0;
    for (size_t i = 0; i < n; ++i)
        dev_max = std::max(dev_max, series[i].survival - (a + b * std::log(series[i].t)));
    if (dev_max <= 0.0) return series.front().t;
    for (size_t i = 0; i < n; ++i)
        if (series[i].survival - (a + b * std::log(series[i].t)) <= frac * dev_max)
            return series[i].t;
    return series.back().t;
}

}  // namespace qdt::bl3
