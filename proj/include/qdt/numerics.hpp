#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

// Scalar root finding, minimization and adaptive quadrature shared by the
// physics modules.
namespace qdt::num {

// Brent's method on a bracketing interval [a,b] with f(a)*f(b) <= 0.
template <class F>
double brent(F&& f, double a, double b, double xtol = 1e-13, int maxit = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("brent: root not bracketed");
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < maxit; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;
        if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
            d = e = m;
        } else {
            double p, q, r, s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                q = fa / fc; r = fb / fc;
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d; d = p / q;
            } else {
                d = e = m;
            }
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0 ? tol : -tol);
        fb = f(b);
        if ((fb > 0) == (fc > 0)) { c = a; fc = fa; e = d = b - a; }
    }
    return b;
}

// Golden-section minimization of f on [a,b].
template <class F>
double golden_min(F&& f, double a, double b, double xtol = 1e-14, int maxit = 300) {
    constexpr double g = 0.3819660112501051;
    double m1 = a + g * (b - a), m2 = b - g * (b - a);
    double f1 = f(m1), f2 = f(m2);
    for (int it = 0; it < maxit && (b - a) > xtol * (std::abs(a) + std::abs(b) + 1e-300); ++it) {
        if (f1 < f2) {
            b = m2; m2 = m1; f2 = f1;
            m1 = a + g * (b - a); f1 = f(m1);
        } else {
            a = m1; m1 = m2; f1 = f2;
            m2 = b - g * (b - a); f2 = f(m2);
        }
    }
    return 0.5 * (a + b);
}

namespace detail {
// 15-point Gauss-Kronrod pair on [-1,1].
inline constexpr double gk_x[8] = {
    0.0, 0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993944, 0.8648644233597691, 0.9491079123427585, 0.9914553711208126};
inline constexpr double gk_wk[8] = {
    0.2094821410847278, 0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
    0.1406532597155259, 0.1047900103222502, 0.0630920926299786, 0.0229353220105292};
inline constexpr double gk_wg[4] = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767, 0.1294849661688697};

template <class F>
inline void gk15(F&& f, double a, double b, double& kron, double& err) {
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    const double f0 = f(c);
    double rk = gk_wk[0] * f0, rg = gk_wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double fp = f(c + h * gk_x[i]);
        const double fm = f(c - h * gk_x[i]);
        rk += gk_wk[i] * (fp + fm);
        if (i % 2 == 0) rg += gk_wg[i / 2] * (fp + fm);
    }
    kron = rk * h;
    err = std::abs((rk - rg) * h);
}
}  // namespace detail

// Adaptive Gauss-Kronrod quadrature.
template <class F>
double integrate(F&& f, double a, double b, double rtol = 1e-10, double atol = 1e-14,
                 int max_depth = 48) {
    struct Seg { double a, b, val, err; int depth; };
    double val, err;
    detail::gk15(f, a, b, val, err);
    std::vector<Seg> stack{{a, b, val, err, 0}};
    double total = 0.0, total_err = 0.0;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.err <= atol + rtol * std::abs(s.val) || s.depth >= max_depth) {
            total += s.val;
            total_err += s.err;
            continue;
        }
        const double m = 0.5 * (s.a + s.b);
        Seg l{s.a, m, 0, 0, s.depth + 1}, r{m, s.b, 0, 0, s.depth + 1};
        detail::gk15(f, l.a, l.b, l.val, l.err);
        detail::gk15(f, r.a, r.b, r.val, r.err);
        stack.push_back(l);
        stack.push_back(r);
    }
    (void)total_err;
    return total;
}

}  // namespace qdt::num
