#include "qdt/schrod1d.hpp"

#include <cmath>
#include <numbers>

#include "qdt/numerics.hpp"
#include "qdt/specfun.hpp"

namespace qdt::sch {

namespace {

constexpr double pi = std::numbers::pi;

// q(x) = 2m(E - V)/ (hbar c)^2  [nm^-2]
Eigen::ArrayXd q_array(const pot::PotentialModel& p, const Grid& g, double E) {
    Eigen::ArrayXd q(g.n_points);
    const double c = 2.0 * p.mass_energy() / (phys::hbar_c * phys::hbar_c);
    for (int i = 0; i < g.n_points; ++i) q[i] = c * (E - p.eval(g.x(i)));
    return q;
}

// Numerov lattice wavenumber for a locally constant q = k^2.
double lattice_k(double k, double h) {
    const double f = 1.0 + h * h * k * k / 12.0;
    const double c = (12.0 - 10.0 * f) / (2.0 * f);
    return std::acos(std::clamp(c, -1.0, 1.0)) / h;
}

struct Sweep {
    Eigen::ArrayXd psi;
    int nodes;
};

// Left-to-right Numerov sweep up to index i_end (inclusive), counting nodes.
Sweep sweep_left(const Eigen::ArrayXd& f, int i_end) {
    Eigen::ArrayXd psi = Eigen::ArrayXd::Zero(f.size());
    psi[0] = 0.0;
    psi[1] = 1e-30;
    int nodes = 0;
    for (int i = 1; i < i_end; ++i) {
        psi[i + 1] = ((12.0 - 10.0 * f[i]) * psi[i] - f[i - 1] * psi[i - 1]) / f[i + 1];
        if (psi[i + 1] * psi[i] < 0.0) ++nodes;
        if (std::abs(psi[i + 1]) > 1e250) psi.head(i + 2) *= 1e-250;
    }
    return {std::move(psi), nodes};
}

Sweep sweep_right(const Eigen::ArrayXd& f, int i_end) {
    const int n = static_cast<int>(f.size());
    Eigen::ArrayXd psi = Eigen::ArrayXd::Zero(n);
    psi[n - 1] = 0.0;
    psi[n - 2] = 1e-30;
    int nodes = 0;
    for (int i = n - 2; i > i_end; --i) {
        psi[i - 1] = ((12.0 - 10.0 * f[i]) * psi[i] - f[i + 1] * psi[i + 1]) / f[i - 1];
        if (psi[i - 1] * psi[i] < 0.0) ++nodes;
        if (std::abs(psi[i - 1]) > 1e250) psi.tail(n - i + 1) *= 1e-250;
    }
    return {std::move(psi), nodes};
}

}  // namespace

Eigen::ArrayXd Grid::coords() const {
    Eigen::ArrayXd x(n_points);
    for (int i = 0; i < n_points; ++i) x[i] = this->x(i);
    return x;
}

// ------------------------------------------------------------ bound states

namespace {

int count_nodes(const pot::PotentialModel& p, const Grid& g, double E) {
    const double h = g.h();
    const Eigen::ArrayXd f = 1.0 + h * h / 12.0 * q_array(p, g, E);
    return sweep_left(f, g.n_points - 1).nodes;
}

// Wronskian mismatch of the two-sided shooting at the match index.
double wronskian_mismatch(const pot::PotentialModel& p, const Grid& g, double E, int im) {
    const double h = g.h();
    const Eigen::ArrayXd f = 1.0 + h * h / 12.0 * q_array(p, g, E);
    Sweep L = sweep_left(f, im + 1);
    Sweep R = sweep_right(f, im - 1);
    const double dL = (L.psi[im + 1] - L.psi[im - 1]) / (2.0 * h);
    const double dR = (R.psi[im + 1] - R.psi[im - 1]) / (2.0 * h);
    const double W = L.psi[im] * dR - dL * R.psi[im];
    const double scale = std::abs(L.psi[im] * dR) + std::abs(dL * R.psi[im]) + 1e-300;
    return W / scale;
}

}  // namespace

namespace {
// Match inside the classically allowed region (both sweeps then only ever
// integrate inward through forbidden zones, which is the stable direction):
// a point 10% of the allowed width in from the rightmost allowed x.
int match_index(const pot::PotentialModel& p, const Grid& g, double E) {
    int hi = -1, lo = -1;
    for (int i = g.n_points - 1; i >= 0; --i) {
        if (p.eval(g.x(i)) < E) {
            if (hi < 0) hi = i;
        } else if (hi >= 0) {
            lo = i;
            break;
        }
    }
    if (hi < 0) throw std::domain_error("bound_states: window below the potential floor");
    if (lo < 0) lo = 0;
    int im = hi - std::max(1, (hi - lo) / 10);
    return std::clamp(im, 2, g.n_points - 3);
}
}  // namespace

std::vector<BoundState> bound_states(const pot::PotentialModel& p, const Grid& g, double E_lo,
                                     double E_hi) {
    if (E_hi > 0.0) throw std::domain_error("bound_states: window must lie below 0");
    std::vector<BoundState> out;
    const int n_lo = count_nodes(p, g, E_lo);
    const int n_hi = count_nodes(p, g, E_hi);
    for (int n = n_lo; n < n_hi; ++n) {
        // bisect the node-count step n -> n+1
        double a = E_lo, b = E_hi;
        while (b - a > 1e-6) {
            const double m = 0.5 * (a + b);
            if (count_nodes(p, g, m) <= n) a = m;
            else b = m;
        }
        const int im = match_index(p, g, 0.5 * (a + b));
        // polish with the Wronskian root inside the bracket
        double lo = a - 2e-6, hi = b + 2e-6;
        double E;
        try {
            E = num::brent([&](double e) { return wronskian_mismatch(p, g, e, im); }, lo, hi,
                           1e-12);
        } catch (const std::invalid_argument&) {
            E = 0.5 * (a + b);
        }
        // assemble the eigenfunction
        const double h = g.h();
        const Eigen::ArrayXd f = 1.0 + h * h / 12.0 * q_array(p, g, E);
        Sweep L = sweep_left(f, im + 1);
        Sweep R = sweep_right(f, im - 1);
        const double s = L.psi[im] / R.psi[im];
        Eigen::ArrayXd psi(g.n_points);
        for (int i = 0; i <= im; ++i) psi[i] = L.psi[i];
        for (int i = im + 1; i < g.n_points; ++i) psi[i] = s * R.psi[i];
        psi /= std::sqrt((psi * psi).sum() * h);
        // count sign changes away from the numerically dead tails
        const double floor_amp = 1e-7 * psi.abs().maxCoeff();
        int nodes = 0;
        double last_signed = 0.0;
        for (int i = 0; i < g.n_points; ++i) {
            if (std::abs(psi[i]) < floor_amp) continue;
            if (last_signed != 0.0 && psi[i] * last_signed < 0.0) ++nodes;
            last_signed = psi[i];
        }
        BoundState bs{nodes, E, std::move(psi), (nodes % 2 == 0) ? +1 : -1};
        out.push_back(std::move(bs));
    }
    return out;
}

// ------------------------------------------------------------ transmission

TransmissionPoint transmission(const pot::PotentialModel& p, const Grid& g, double E) {
    if (!(E > 0.0)) throw std::domain_error("transmission: E must be > 0");
    const double h = g.h();
    const int n = g.n_points;
    const Eigen::ArrayXd f = 1.0 + h * h / 12.0 * q_array(p, g, E);
    const double k = phys::k_of_E(E, 0.0, p.mass_energy());
    const double kh = lattice_k(k, h);

    Eigen::ArrayXcd psi(n);
    psi[n - 1] = std::exp(cplx(0.0, kh * g.x(n - 1)));
    psi[n - 2] = std::exp(cplx(0.0, kh * g.x(n - 2)));
    for (int i = n - 2; i > 0; --i)
        psi[i - 1] = ((12.0 - 10.0 * f[i]) * psi[i] - f[i + 1] * psi[i + 1]) / f[i - 1];

    const cplx e0p = std::exp(cplx(0.0, kh * g.x(0))), e0m = 1.0 / e0p;
    const cplx e1p = std::exp(cplx(0.0, kh * g.x(1))), e1m = 1.0 / e1p;
    Eigen::Matrix2cd M;
    M << e0p, e0m, e1p, e1m;
    Eigen::Vector2cd rhs;
    rhs << psi[0], psi[1];
    const Eigen::Vector2cd ab = M.fullPivLu().solve(rhs);
    const double A2 = std::norm(ab[0]), B2 = std::norm(ab[1]);
    return {E, 1.0 / A2, B2 / A2};
}

std::vector<TransmissionPoint> transmission_scan(const pot::PotentialModel& p, const Grid& g,
                                                 const std::vector<double>& energies) {
    std::vector<TransmissionPoint> out;
    out.reserve(energies.size());
    for (const double E : energies) out.push_back(transmission(p, g, E));
    return out;
}

FittedResonance fit_breit_wigner(const std::vector<TransmissionPoint>& scan) {
    if (scan.size() < 5) throw std::runtime_error("fit_breit_wigner: too few points");
    // initial guesses from the sampled maximum and half-maximum width
    int ipk = 0;
    for (size_t i = 0; i < scan.size(); ++i)
        if (scan[i].T > scan[ipk].T) ipk = static_cast<int>(i);
    double T0 = scan[ipk].T, Er = scan[ipk].E;
    double lo = scan.front().E, hi = scan.back().E;
    for (int i = ipk; i >= 0; --i)
        if (scan[i].T < T0 / 2) { lo = scan[i].E; break; }
    for (size_t i = ipk; i < scan.size(); ++i)
        if (scan[i].T < T0 / 2) { hi = scan[i].E; break; }
    double G = std::max(hi - lo, 1e-300);

    Eigen::Vector3d prm(T0, Er, G);
    double prev_cost = 1e300;
    for (int it = 0; it < 100; ++it) {
        Eigen::Matrix3d JtJ = Eigen::Matrix3d::Zero();
        Eigen::Vector3d Jtr = Eigen::Vector3d::Zero();
        double cost = 0.0;
        for (const auto& pt : scan) {
            const double g2 = prm[2] * prm[2] / 4.0;
            const double d = pt.E - prm[1];
            const double den = d * d + g2;
            const double m = prm[0] * g2 / den;
            const double r = m - pt.T;
            Eigen::Vector3d J;
            J[0] = g2 / den;
            J[1] = prm[0] * g2 * 2.0 * d / (den * den);
            J[2] = prm[0] * (prm[2] / 2.0) * d * d / (den * den);
            JtJ += J * J.transpose();
            Jtr += J * r;
            cost += r * r;
        }
        if (!std::isfinite(cost)) throw std::runtime_error("fit_breit_wigner: diverged");
        const Eigen::Vector3d step = JtJ.ldlt().solve(Jtr);
        prm -= step;
        prm[2] = std::abs(prm[2]);
        if (std::abs(prev_cost - cost) < 1e-28 + 1e-14 * cost) break;
        prev_cost = cost;
    }
    double rms = 0.0;
    for (const auto& pt : scan) {
        const double g2 = prm[2] * prm[2] / 4.0;
        const double d = pt.E - prm[1];
        rms += std::pow(prm[0] * g2 / (d * d + g2) - pt.T, 2);
    }
    rms = std::sqrt(rms / scan.size());
    if (!std::isfinite(prm.sum()) || prm[2] <= 0.0)
        throw std::runtime_error("fit_breit_wigner: non-convergent fit, rms " + std::to_string(rms));
    return {prm[1], prm[2], prm[0], rms};
}

FittedResonance fit_resonance(const pot::PotentialModel& p, const Grid& g, double E_lo,
                              double E_hi) {
    const auto negT = [&](double E) { return -transmission(p, g, E).T; };
    const double Er0 = num::golden_min(negT, E_lo, E_hi, 1e-15);
    const double Tp = transmission(p, g, Er0).T;
    // half-maximum bracketing on both sides
    const auto half = [&](double E) { return transmission(p, g, E).T - Tp / 2.0; };
    double w = std::max(1e-14, 1e-14 * std::abs(Er0));
    while (Er0 + w < E_hi && half(Er0 + w) > 0.0) w *= 2.0;
    const double ehi = num::brent(half, Er0, std::min(Er0 + w, E_hi), 1e-18);
    w = std::max(1e-14, 1e-14 * std::abs(Er0));
    while (Er0 - w > E_lo && half(Er0 - w) > 0.0) w *= 2.0;
    const double elo = num::brent(half, std::max(Er0 - w, E_lo), Er0, 1e-18);
    const double G0 = ehi - elo;
    // sample densely enough that >= 20 points fall inside +-2 Gamma
    std::vector<TransmissionPoint> win;
    const int nw = 61;
    for (int i = 0; i < nw; ++i) {
        const double E = Er0 + (-4.0 + 8.0 * i / (nw - 1)) * G0;
        if (E > 0.0) win.push_back(transmission(p, g, E));
    }
    return fit_breit_wigner(win);
}

// ------------------------------------------------- resonance wavefunction

ResonanceWave resonance_wavefunction(const pot::PotentialModel& p, const Grid& g, double E_r,
                                     int parity) {
    if (std::abs(g.x_min + g.x_max) > 0.5 * g.h())
        throw std::invalid_argument("resonance_wavefunction: grid must be symmetric");
    const double h = g.h();
    const int n = g.n_points;
    const int ic = (n - 1) / 2;  // index of x ~ 0
    const Eigen::ArrayXd f = 1.0 + h * h / 12.0 * q_array(p, g, E_r);

    Eigen::ArrayXd half = Eigen::ArrayXd::Zero(n - ic);
    if (parity > 0) {
        half[0] = 1.0;
        half[1] = half[0] * (12.0 - 10.0 * f[ic]) / (2.0 * f[ic + 1]);
    } else {
        half[0] = 0.0;
        half[1] = h;
    }
    for (int i = 1; i < n - ic - 1; ++i)
        half[i + 1] =
            ((12.0 - 10.0 * f[ic + i]) * half[i] - f[ic + i - 1] * half[i - 1]) / f[ic + i + 1];

    Eigen::ArrayXd psi(n);
    for (int i = 0; i < n - ic; ++i) {
        psi[ic + i] = half[i];
        psi[ic - i] = parity > 0 ? half[i] : -half[i];
    }

    const auto tps = pot::turning_points(p, E_r);
    if (tps.empty()) throw pot::ShapeError("resonance_wavefunction: no turning points");
    const double b_outer = tps.back();

    double norm = 0.0;
    int nodes = 0;
    for (int i = 0; i < n; ++i) {
        const double x = g.x(i);
        if (std::abs(x) <= b_outer) {
            norm += psi[i] * psi[i] * h;
            if (i > 0 && std::abs(g.x(i - 1)) <= b_outer && psi[i] * psi[i - 1] < 0.0) ++nodes;
        }
    }
    psi /= std::sqrt(norm);
    return {E_r, parity, b_outer, std::move(psi), g.coords(), nodes};
}

double dipole_element(const Eigen::ArrayXd& psi_i, const Eigen::ArrayXd& psi_j, const Grid& g,
                      double x_cut) {
    if (psi_i.size() != g.n_points || psi_j.size() != g.n_points)
        throw std::invalid_argument("dipole_element: grid mismatch");
    double s = 0.0;
    const double h = g.h();
    for (int i = 0; i < g.n_points; ++i) {
        const double x = g.x(i);
        if (std::abs(x) <= x_cut) s += psi_i[i] * x * psi_j[i] * h;
    }
    return std::abs(s);
}

double e1_rate(double d_nm, double omega_ev) {
    if (d_nm < 0.0 || omega_ev < 0.0) throw std::domain_error("e1_rate: negative input");
    const double g_ev = 4.0 / 3.0 * phys::fine_structure * omega_ev * omega_ev * omega_ev *
                        d_nm * d_nm / (phys::hbar_c * phys::hbar_c);
    return g_ev / phys::hbar_ev_s;
}

// ---------------------------------------------------- partially linear ramp

namespace {

double ramp_zeta(const pot::PartiallyLinearPotential& p, double E, double x) {
    const double m = p.mass_energy(), s = p.slope();
    const double c0 = std::cbrt(2.0 * m / (phys::hbar_c * phys::hbar_c * s * s));
    return c0 * (E - p.v1() + s * (x - p.a()));
}

}  // namespace

RampSolution linear_ramp_wave(const pot::PartiallyLinearPotential& p, double E, double x) {
    if (!(x > p.a() && x <= p.b()))
        throw std::domain_error("linear_ramp_wave: x outside the ramp");
    const double zeta = ramp_zeta(p, E, x);
    const double m = p.mass_energy(), s = p.slope();
    const double c0 = std::cbrt(2.0 * m / (phys::hbar_c * phys::hbar_c * s * s));
    const auto ai = sf::airy(-zeta);
    const cplx val(ai.ai, -ai.bi);                     // Ai(-z) - i Bi(-z): outgoing
    const cplx der = -c0 * s * cplx(ai.aip, -ai.bip);  // chain rule, d(-zeta)/dx = -c0 s
    return {val, der, zeta};
}

double linear_ramp_residual(const pot::PartiallyLinearPotential& p, double E, int parity) {
    const double m = p.mass_energy();
    const double kin = std::sqrt(2.0 * m * (E + p.v0())) / phys::hbar_c;
    const double lhs = parity > 0 ? -kin * std::tan(kin * p.a()) : kin / std::tan(kin * p.a());
    const RampSolution rs = linear_ramp_wave(p, E, p.a() + 1e-12);
    const cplx logd = rs.derivative / rs.value;
    return std::abs(cplx(lhs, 0.0) - logd);
}

std::vector<double> linear_ramp_resonances(const pot::PartiallyLinearPotential& p, double E_lo,
                                           double E_hi, int parity, int n_scan) {
    std::vector<double> es(n_scan), rs(n_scan);
    for (int i = 0; i < n_scan; ++i) {
        es[i] = E_lo + (E_hi - E_lo) * i / (n_scan - 1);
        rs[i] = linear_ramp_residual(p, es[i], parity);
    }
    std::vector<double> roots;
    for (int i = 1; i + 1 < n_scan; ++i) {
        if (rs[i] < rs[i - 1] && rs[i] < rs[i + 1]) {
            const double E = num::golden_min(
                [&](double e) { return linear_ramp_residual(p, e, parity); }, es[i - 1], es[i + 1],
                1e-12);
            roots.push_back(E);
        }
    }
    return roots;
}

RampLateTime linear_ramp_late_time(const pot::PartiallyLinearPotential& p, double x, double t_s) {
    if (!(x > p.b())) throw std::domain_error("linear_ramp_late_time: need x > b");
    if (!(t_s > 0.0)) throw std::domain_error("linear_ramp_late_time: need t > 0");
    const double m = p.mass_energy(), s = p.slope(), v1 = p.v1();
    const double hC = phys::hbar_c;
    const double t_ev = t_s / phys::hbar_ev_s;  // time in 1/eV
    // stationary phase on the second sheet of sqrt(E - V1):
    // g(E) = sqrt(2m)/(s hbarc) (sqrt(E) + sqrt(E-V1)) + sqrt(m/2E)(x-b)/hbarc - t = 0
    const auto gfun = [&](double E) {
        return std::sqrt(2.0 * m) / (s * hC) * (std::sqrt(E) + std::sqrt(E - v1)) +
               std::sqrt(m / (2.0 * E)) * (x - p.b()) / hC - t_ev;
    };
    // asymptotic start E ~ s^2 hbarc^2 t^2/(8 m)
    double E = v1 + s * s * hC * hC * t_ev * t_ev / (8.0 * m);
    for (int it = 0; it < 200; ++it) {
        const double gv = gfun(E);
        const double dg = std::sqrt(2.0 * m) / (2.0 * s * hC) *
                              (1.0 / std::sqrt(E) + 1.0 / std::sqrt(E - v1)) -
                          std::sqrt(m / 2.0) * (x - p.b()) / (2.0 * std::pow(E, 1.5) * hC);
        const double step = gv / dg;
        E -= step;
        if (E <= v1) E = v1 + 1e-12;
        if (std::abs(step) < 1e-12 * E) break;
    }
    const double d2 = std::abs(std::sqrt(2.0 * m) / (2.0 * s * hC) *
                                   (1.0 / std::sqrt(E) + 1.0 / std::sqrt(E - v1)) -
                               std::sqrt(m / 2.0) * (x - p.b()) / (2.0 * std::pow(E, 1.5) * hC));
    const double width = 1.0 / std::sqrt(d2);
    const double k = std::sqrt(2.0 * m * E) / hC;
    const double prob = 2.0 * pi / (d2 * k);
    return {E, width, prob};
}

}  // namespace qdt::sch
