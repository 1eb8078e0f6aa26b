#include "qdt/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdt/numerics.hpp"
#include "qdt/specfun.hpp"

namespace qdt::pot {

namespace {
constexpr double pi = std::numbers::pi;
}

// ---------------------------------------------------- SmoothDoubleBarrier --

SmoothDoubleBarrier::SmoothDoubleBarrier(double a_nm, double b_nm, double delta_nm, double vw_ev,
                                         phys::EffectiveMass m)
    : a_(a_nm), b_(b_nm), delta_(delta_nm), vw_(vw_ev), mass_(m) {
    if (!(a_ > 0.0) || !(delta_ > 0.0) || !(vw_ > 0.0))
        throw std::domain_error("SmoothDoubleBarrier: a, Delta, V_w must be > 0");
    if (!(b_ > a_ && b_ < std::sqrt(2.0) * a_))
        throw std::domain_error("SmoothDoubleBarrier: need a < b < sqrt(2) a");
}

SmoothDoubleBarrier SmoothDoubleBarrier::with_default_ratio(double a_nm, double delta_nm,
                                                            double vw_ev, phys::EffectiveMass m) {
    return SmoothDoubleBarrier(a_nm, (std::sqrt(2.0) + 1.0) / 2.0 * a_nm, delta_nm, vw_ev, m);
}

double SmoothDoubleBarrier::eval(double x) const {
    const double num = 1.0 - (x * x + a_ * a_) / (b_ * b_);
    const double den = 1.0 + std::exp((x * x - a_ * a_) / (delta_ * delta_));
    return -vw_ * num / den;
}

double SmoothDoubleBarrier::deriv(double x) const {
    const double g = std::exp((x * x - a_ * a_) / (delta_ * delta_));
    const double N = 1.0 - (x * x + a_ * a_) / (b_ * b_);
    const double D = 1.0 + g;
    const double Np = -2.0 * x / (b_ * b_);
    const double gp = g * 2.0 * x / (delta_ * delta_);
    return -vw_ * (Np / D - N * gp / (D * D));
}

double SmoothDoubleBarrier::deriv2(double x) const {
    const double d2 = delta_ * delta_;
    const double g = std::exp((x * x - a_ * a_) / d2);
    const double N = 1.0 - (x * x + a_ * a_) / (b_ * b_);
    const double D = 1.0 + g;
    const double Np = -2.0 * x / (b_ * b_);
    const double Npp = -2.0 / (b_ * b_);
    const double gp = g * 2.0 * x / d2;
    const double gpp = g * (2.0 / d2 + (2.0 * x / d2) * (2.0 * x / d2));
    return -vw_ * (Npp / D - 2.0 * Np * gp / (D * D) - N * gpp / (D * D) +
                   2.0 * N * gp * gp / (D * D * D));
}

// ----------------------------------------------- RectangularDoubleBarrier --

RectangularDoubleBarrier::RectangularDoubleBarrier(double a_nm, double b_nm, double v0_ev,
                                                   double v1_ev, phys::EffectiveMass m)
    : a_(a_nm), b_(b_nm), v0_(v0_ev), v1_(v1_ev), mass_(m) {
    if (!(b_ > a_) || !(v1_ > v0_))
        throw std::domain_error("RectangularDoubleBarrier: need b > a and v1 > v0");
}

double RectangularDoubleBarrier::eval(double x) const {
    // midpoint value exactly at the steps (keeps grid methods second order)
    const double r = std::abs(x);
    if (r == a_) return 0.5 * (v0_ + v1_);
    if (r == b_) return 0.5 * v1_;
    if (r < a_) return v0_;
    if (r < b_) return v1_;
    return 0.0;
}

// ------------------------------------------------ PartiallyLinearPotential --

PartiallyLinearPotential::PartiallyLinearPotential(double a_nm, double b_nm, double v0_ev,
                                                   double v1_ev, double slope_ev_nm,
                                                   phys::EffectiveMass m)
    : a_(a_nm), b_(b_nm), v0_(v0_ev), v1_(v1_ev), slope_(slope_ev_nm), mass_(m) {
    if (!(b_ > a_) || !(v0_ > 0.0) || !(v1_ > 0.0) || !(slope_ > 0.0))
        throw std::domain_error("PartiallyLinearPotential: bad parameters");
}

double PartiallyLinearPotential::eval(double x) const {
    const double r = std::abs(x);
    if (r == a_) return 0.5 * (-v0_ + v1_);  // midpoint at the cusp step
    if (r < a_) return -v0_;
    if (r < b_) return v1_ - slope_ * (r - a_);
    if (r == b_) return 0.5 * (v1_ - slope_ * (b_ - a_));
    return 0.0;
}

double PartiallyLinearPotential::deriv(double x) const {
    const double r = std::abs(x);
    if (r < a_ || r > b_) return 0.0;
    return x > 0 ? -slope_ : slope_;
}

// ------------------------------------------------- AlphaNucleusPotential --

AlphaNucleusPotential::AlphaNucleusPotential(int A, int Z, int N) : A_(A), Z_(Z), N_(N) {
    if (A != Z + N) throw std::domain_error("AlphaNucleusPotential: A != Z + N");
    v0_ = 51.0 - 33.0 * static_cast<double>(N_ - Z_) / A_;
    R_ = 1.27 * std::cbrt(static_cast<double>(A_));
    aws_ = 0.67;
    // 1/c = 2 pi int_0^inf x^2 (1 - tanh(R/(2a) (x-1))) dx, computed
    // numerically; the closed form is regression-checked against it.
    const double beta = R_ / (2.0 * aws_);
    const auto f = [beta](double x) { return x * x * (1.0 - std::tanh(beta * (x - 1.0))); };
    const double inv_c = 2.0 * pi * (num::integrate(f, 0.0, 4.0, 1e-13) +
                                     num::integrate(f, 4.0, 80.0, 1e-13));
    c_ = 1.0 / inv_c;
}

double AlphaNucleusPotential::woods_saxon(double r) const {
    if (!(r > 0.0)) throw std::domain_error("woods_saxon: r <= 0");
    return -v0_ / (1.0 + std::exp((r - R_) / aws_));
}

double AlphaNucleusPotential::coulomb(double r) const {
    if (!(r > 0.0)) throw std::domain_error("coulomb: r <= 0");
    const double a = aws_, ra = r / a, Ra = R_ / a;
    const double J = pi * pi / 6.0 + 0.5 * Ra * Ra - ra * ra / 6.0 -
                     sf::polylog(2, -std::exp((r - R_) / a)) +
                     2.0 / ra * (sf::polylog(3, -std::exp((r - R_) / a)) -
                                 sf::polylog(3, -std::exp(-R_ / a)));
    const double pref = 8.0 * pi * (Z_ - 2) * phys::coulomb_e2 * c_ * a * a / (R_ * R_ * R_);
    return pref * J;
}

double AlphaNucleusPotential::coulomb_quadrature(double r) const {
    if (!(r > 0.0)) throw std::domain_error("coulomb_quadrature: r <= 0");
    const auto v = [this](double y) { return 1.0 / (1.0 + std::exp((y - R_) / aws_)); };
    const double i1 = num::integrate([&](double y) { return y * y * v(y); }, 0.0, r, 1e-13);
    const double i2 = num::integrate([&](double y) { return y * v(y); }, r, r + 80.0, 1e-13);
    return 8.0 * pi * (Z_ - 2) * phys::coulomb_e2 * c_ / (R_ * R_ * R_) * (i1 / r + i2);
}

double AlphaNucleusPotential::total(double r) const { return woods_saxon(r) + coulomb(r); }

// ---------------------------------------------------------- free helpers --

HarmonicFit harmonic_fit(const SmoothDoubleBarrier& p) {
    const double a = p.a(), b = p.b(), vw = p.v_w();
    const double s = a * a / (p.delta() * p.delta());
    HarmonicFit h;
    h.c0 = (b * b - a * a) / (b * b * (1.0 + std::exp(-s)));
    h.c2 = p.deriv2(0.0) / (2.0 * vw);
    h.omega0 = phys::hbar_c * std::sqrt(2.0 * vw * h.c2 / p.mass_energy());
    h.n0 = h.c0 * vw / h.omega0 - 0.5;
    return h;
}

BarrierTop barrier_top(const PotentialModel& p, double x_lo, double x_hi) {
    // bracket the maximum of V on x > 0 by scanning V'
    const int n = 4000;
    double prev_x = x_lo, prev_d = p.deriv(x_lo);
    double root = -1.0;
    for (int i = 1; i <= n; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / n;
        const double d = p.deriv(x);
        if (prev_d > 0.0 && d <= 0.0) {
            root = num::brent([&p](double t) { return p.deriv(t); }, prev_x, x, 1e-13);
            break;
        }
        prev_x = x;
        prev_d = d;
    }
    if (root < 0.0) throw ShapeError("barrier_top: no interior maximum on x > 0");
    BarrierTop bt;
    bt.x_max = root;
    bt.v_max = p.eval(root);
    bt.v_pp = p.deriv2(root);
    if (!(bt.v_pp < 0.0)) throw ShapeError("barrier_top: stationary point is not a maximum");
    return bt;
}

std::vector<double> turning_points(const PotentialModel& p, double E, double x_span,
                                   double scan_step) {
    std::vector<double> roots;
    const auto f = [&p, E](double x) { return p.eval(x) - E; };
    // sign-change scan; runs of exact zeros (step potentials touching E) are
    // reported once, at the edge abutting a nonzero region
    double x = -x_span, fx = f(x);
    bool in_zero_run = fx == 0.0;
    double run_start = x;
    while (x < x_span) {
        const double x2 = std::min(x + scan_step, x_span);
        const double f2 = f(x2);
        if (f2 == 0.0) {
            if (!in_zero_run) {
                in_zero_run = true;
                run_start = x2;
            }
        } else {
            if (in_zero_run) {
                if (run_start > -x_span) roots.push_back(run_start);
                if (run_start != x) roots.push_back(x);  // run longer than one node
                in_zero_run = false;
            } else if (fx * f2 < 0.0) {
                roots.push_back(num::brent(f, x, x2, 1e-12));
            }
        }
        x = x2;
        fx = f2;
    }
    if (in_zero_run && run_start > -x_span) roots.push_back(run_start);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                roots.end());
    return roots;
}

}  // namespace qdt::pot
