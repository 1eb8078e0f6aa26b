#include "qdt/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdt::sf {

namespace {

constexpr double pi = std::numbers::pi;

// ---------------------------------------------------------------- Airy ----

// Maclaurin series: Ai = c1 f - c2 g, Bi = sqrt(3) (c1 f + c2 g) with
// f, g the standard z^{3k} / z^{3k+1} solutions of y'' = z y.
AiryResult airy_series(double z) {
    const double c1 = 0.3550280538878172;   // Ai(0) = 3^{-2/3}/Gamma(2/3)
    const double c2 = 0.2588194037928068;   // -Ai'(0) = 3^{-1/3}/Gamma(1/3)
    const double z3 = z * z * z;
    double f = 1.0, fp = 0.0, tf = 1.0;      // f, f'
    double g = z, gp = 1.0, tg = z;          // g, g'
    for (int k = 1; k < 80; ++k) {
        const double k3 = 3.0 * k;
        tf *= z3 / (k3 * (k3 - 1.0));
        tg *= z3 / (k3 * (k3 + 1.0));
        f += tf;
        g += tg;
        fp += tf * k3 / (z == 0.0 ? 1.0 : z);         // d/dz z^{3k} = 3k z^{3k-1}
        gp += tg * (k3 + 1.0) / (z == 0.0 ? 1.0 : z); // guarded; z=0 terms vanish anyway
        if (std::abs(tf) < 1e-17 * std::abs(f) && std::abs(tg) < 1e-17 * std::abs(g)) break;
    }
    if (z == 0.0) { fp = 0.0; gp = 1.0; }
    AiryResult r;
    r.ai = c1 * f - c2 * g;
    r.bi = std::sqrt(3.0) * (c1 * f + c2 * g);
    r.aip = c1 * fp - c2 * gp;
    r.bip = std::sqrt(3.0) * (c1 * fp + c2 * gp);
    return r;
}

// u_k, v_k coefficient recurrences shared by both asymptotic sectors:
// u_k = Gamma(3k+1/2)/(54^k k! Gamma(k+1/2)), v_k = -(6k+1)/(6k-1) u_k.
struct UV {
    double u = 1.0, v = 1.0;
    void advance(int k) {  // k >= 1
        const double kk = k;
        u *= (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) /
             (216.0 * kk * (2.0 * kk - 1.0));
        v = u * (6.0 * kk + 1.0) / (1.0 - 6.0 * kk);
    }
};

// Asymptotic expansions for z >= 9 (DLMF 9.7.5-9.7.8).
void airy_asym_pos(double z, double& ai, double& bi, double& aip, double& bip) {
    const double zeta = 2.0 / 3.0 * std::pow(z, 1.5);
    double su_p = 0, su_m = 0, sv_p = 0, sv_m = 0;
    UV uv;
    double powp = 1.0, powm = 1.0, prev = 1e300;
    for (int k = 0; k < 40; ++k) {
        if (k > 0) {
            uv.advance(k);
            powp /= zeta;
            powm /= -zeta;
        }
        const double tu = uv.u * powp;
        if (std::abs(tu) > prev) break;
        prev = std::abs(tu);
        su_p += uv.u * powp; su_m += uv.u * powm;
        sv_p += uv.v * powp; sv_m += uv.v * powm;
        if (prev < 1e-17) break;
    }
    const double q = std::pow(z, 0.25);
    ai = 0.5 / std::sqrt(pi) / q * std::exp(-zeta) * su_m;
    bi = 1.0 / std::sqrt(pi) / q * std::exp(zeta) * su_p;
    aip = -0.5 / std::sqrt(pi) * q * std::exp(-zeta) * sv_m;
    bip = 1.0 / std::sqrt(pi) * q * std::exp(zeta) * sv_p;
}

// Oscillatory asymptotics for z <= -8 (DLMF 9.7.9-9.7.12).
void airy_asym_neg(double zneg, double& ai, double& bi, double& aip, double& bip) {
    const double t = -zneg;
    const double zeta = 2.0 / 3.0 * std::pow(t, 1.5);
    // ue = sum (-1)^j u_{2j} zeta^{-2j}, uo = sum (-1)^j u_{2j+1} zeta^{-2j-1}
    double ue = 0, uo = 0, ve = 0, vo = 0;
    UV uv;
    double p = 1.0;
    int sign = 1;
    for (int k = 0; k < 40; ++k) {
        if (k > 0) {
            uv.advance(k);
            p /= zeta;
        }
        const double tu = uv.u * p, tv = uv.v * p;
        if (std::abs(tu) < 1e-17 && k > 2) break;
        if (k % 2 == 0) {
            ue += sign * tu;
            ve += sign * tv;
        } else {
            uo += sign * tu;
            vo += sign * tv;
            sign = -sign;
        }
    }
    const double c = std::cos(zeta - pi / 4.0), s = std::sin(zeta - pi / 4.0);
    const double q = std::pow(t, 0.25);
    ai = (c * ue + s * uo) / (std::sqrt(pi) * q);
    bi = (-s * ue + c * uo) / (std::sqrt(pi) * q);
    aip = (s * ve - c * vo) * q / std::sqrt(pi);
    bip = (c * ve + s * vo) * q / std::sqrt(pi);
}

// Taylor marching of y'' = z y from (z0, y, y') to z0 + h.
void airy_taylor_step(double z0, double h, double& y, double& yp) {
    double a[33];
    a[0] = y;
    a[1] = yp;
    a[2] = 0.5 * z0 * a[0];
    for (int n = 1; n <= 30; ++n)
        a[n + 2] = (z0 * a[n] + a[n - 1]) / ((n + 2.0) * (n + 1.0));
    double s = a[32], sp = 32.0 * a[32];
    for (int n = 31; n >= 1; --n) {
        s = s * h + a[n];
        sp = sp * h + n * a[n];
    }
    y = s * h + a[0];
    yp = sp;
}

}  // namespace

AiryResult airy(double z) {
    if (!(std::abs(z) <= 50.0)) throw std::range_error("airy: |z| > 50");
    if (z <= -8.0) {
        AiryResult r;
        airy_asym_neg(z, r.ai, r.bi, r.aip, r.bip);
        return r;
    }
    if (z <= 4.0) return airy_series(z);
    if (z >= 9.0) {
        AiryResult r;
        airy_asym_pos(z, r.ai, r.bi, r.aip, r.bip);
        return r;
    }
    // 4 < z < 9: march Ai down from 9 (growing direction, stable) and
    // Bi up from 4 (growing direction, stable).
    AiryResult r;
    {
        AiryResult seed;
        airy_asym_pos(9.0, seed.ai, seed.bi, seed.aip, seed.bip);
        double y = seed.ai, yp = seed.aip, zc = 9.0;
        const int nstep = 24;
        const double h = (z - 9.0) / nstep;
        for (int i = 0; i < nstep; ++i) {
            airy_taylor_step(zc, h, y, yp);
            zc += h;
        }
        r.ai = y; r.aip = yp;
    }
    {
        AiryResult seed = airy_series(4.0);
        double y = seed.bi, yp = seed.bip, zc = 4.0;
        const int nstep = 24;
        const double h = (z - 4.0) / nstep;
        for (int i = 0; i < nstep; ++i) {
            airy_taylor_step(zc, h, y, yp);
            zc += h;
        }
        r.bi = y; r.bip = yp;
    }
    return r;
}

// --------------------------------------------------------------- Gamma ----

namespace {
constexpr double lanczos_g[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
}

cplx cgamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection; sin can overflow for large |Im z|, fine for our ranges
        return pi / (std::sin(pi * z) * cgamma(1.0 - z));
    }
    z -= 1.0;
    cplx x = lanczos_g[0];
    for (int i = 1; i < 9; ++i) x += lanczos_g[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx rgamma(cplx z) {
    if (z.real() < 0.5) return std::sin(pi * z) * cgamma(1.0 - z) / pi;
    return 1.0 / cgamma(z);
}

// -------------------------------------------------------------- Kummer ----

namespace {

cplx kummer_series(cplx a, cplx b, cplx z) {
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k < 2000; ++k) {
        const double kd = k;
        term *= (a + (kd - 1.0)) / (b + (kd - 1.0)) * z / kd;
        sum += term;
        if (k > 4 && std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    return sum;
}

// sum_k (p)_k (q)_k / (k! w^k), truncated at the smallest term
cplx asym_sum(cplx p, cplx q, cplx w) {
    cplx sum = 1.0, term = 1.0;
    double prev = 1e300;
    for (int k = 1; k < 80; ++k) {
        const double kd = k;
        term *= (p + (kd - 1.0)) * (q + (kd - 1.0)) / (kd * w);
        if (std::abs(term) > prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

cplx kummer_asym(cplx a, cplx b, cplx z) {
    const cplx t1 = std::exp(z) * std::pow(z, a - b) * rgamma(a) * asym_sum(b - a, 1.0 - a, z);
    const cplx t2 = std::pow(-z, -a) * rgamma(b - a) * asym_sum(a, a - b + 1.0, -z);
    return cgamma(b) * (t1 + t2);
}

bool is_nonpositive_int(cplx b) {
    if (std::abs(b.imag()) > 1e-14) return false;
    const double r = b.real();
    return r <= 0.0 && std::abs(r - std::round(r)) < 1e-12;
}

}  // namespace

cplx kummer_M(cplx a, cplx b, cplx z) {
    if (is_nonpositive_int(b)) throw std::domain_error("kummer_M: b is a non-positive integer");
    if (std::abs(z) <= 30.0) return kummer_series(a, b, z);
    return kummer_asym(a, b, z);
}

// --------------------------------------------------------------- Weber ----

namespace {

// Direct asymptotic expansion D_l(z) ~ z^l e^{-z^2/4} sum_k (-1)^k (-l)_{2k} / (k! (2 z^2)^k),
// valid |arg z| < 3pi/4; used in the decaying sector where the Kummer
// assembly cancels catastrophically.
cplx weber_asym(cplx lambda, cplx z) {
    cplx sum = 1.0, term = 1.0;
    double prev = 1e300;
    const cplx w = 2.0 * z * z;
    for (int k = 1; k < 60; ++k) {
        const double kd = k;
        term *= -(-lambda + (2.0 * kd - 2.0)) * (-lambda + (2.0 * kd - 1.0)) / (kd * w);
        if (std::abs(term) > prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-17 * std::abs(sum)) break;
    }
    return std::pow(z, lambda) * std::exp(-z * z / 4.0) * sum;
}

// Kummer-branch assembly; accurate except in the exponentially decaying
// real-axis sector where the two branches cancel.
cplx weber_assembly(cplx lambda, cplx z) {
    const cplx zh = z * z / 2.0;
    const cplx t1 = kummer_M(-lambda / 2.0, 0.5, zh) * rgamma((1.0 - lambda) / 2.0);
    const cplx t2 =
        std::sqrt(2.0) * z * kummer_M((1.0 - lambda) / 2.0, 1.5, zh) * rgamma(-lambda / 2.0);
    const cplx pref = std::sqrt(pi) * std::pow(2.0, lambda / 2.0);
    return pref * std::exp(-zh / 2.0) * (t1 - t2);
}

// Taylor march of w'' = (z^2/4 - lambda - 1/2) w along the real axis, seeded
// by the asymptotic series far out and stepping down (the growing direction
// for the decaying solution, hence stable).
cplx weber_march_real(cplx lambda, double z) {
    const double z_seed = std::min(39.0, std::max(12.0, 2.0 * std::abs(lambda) + 4.0));
    const double h_seed = 1e-4;
    cplx w = weber_asym(lambda, z_seed);
    cplx wp = (weber_asym(lambda, z_seed + h_seed) - weber_asym(lambda, z_seed - h_seed)) /
              (2.0 * h_seed);
    double zc = z_seed;
    const int nstep = static_cast<int>(std::ceil((z_seed - z) / 0.2)) + 1;
    const double h = (z - z_seed) / nstep;
    for (int s = 0; s < nstep; ++s) {
        cplx a[35];
        a[0] = w;
        a[1] = wp;
        const cplx c0 = zc * zc / 4.0 - lambda - 0.5;
        const double c1 = zc / 2.0, c2 = 0.25;
        for (int n = 0; n <= 30; ++n) {
            cplx rhs = c0 * a[n];
            if (n >= 1) rhs += c1 * a[n - 1];
            if (n >= 2) rhs += c2 * a[n - 2];
            a[n + 2] = rhs / ((n + 2.0) * (n + 1.0));
        }
        cplx sv = a[32], sp = 32.0 * a[32];
        for (int n = 31; n >= 1; --n) {
            sv = sv * h + a[n];
            sp = sp * h + static_cast<double>(n) * a[n];
        }
        w = sv * h + a[0];
        wp = sp;
        zc += h;
    }
    return w;
}

}  // namespace

cplx weber_D(cplx lambda, cplx z) {
    if (!(std::abs(z) <= 40.0)) throw std::range_error("weber_D: |z| > 40");
    cplx out;
    // Decaying sector near the positive real axis: the Kummer branches cancel
    // to ~e^{-z^2/2} relative accuracy. The real-axis strip is handled by the
    // ODE march, complex arguments there by the direct asymptotic series.
    if (z.imag() == 0.0 && z.real() > 2.0021 && z.real() < 12.0) {
        out = weber_march_real(lambda, z.real());
    } else if (std::abs(z) > 6.0 && (z * z).real() > 0.5 * std::norm(z) && z.real() > 0.0) {
        out = weber_asym(lambda, z);
    } else {
        out = weber_assembly(lambda, z);
    }
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw std::range_error("weber_D: overflow in Gamma prefactor");
    return out;
}

cplx outgoing_parabolic(double a_u, double u) {
    const cplx nu(-0.5, -0.5 * a_u * a_u);
    const cplx zfac = std::sqrt(2.0) * std::exp(cplx(0.0, -pi / 4.0));
    return weber_D(nu, zfac * u);
}

// ------------------------------------------------------------- polylog ----

namespace {

double li_series(int n, double x) {
    // |x| <= 1/2 after reductions; plain power series
    double sum = 0.0, t = x;
    for (int k = 1; k < 200; ++k) {
        sum += t;
        t = t * x * std::pow(static_cast<double>(k) / (k + 1.0), n);
        if (std::abs(t) < 1e-18 * std::max(std::abs(sum), 1e-300)) break;
    }
    return sum;
}

double li2_impl(double x) {
    if (x < -1.0) {
        const double y = -x;
        const double L = std::log(y);
        return -pi * pi / 6.0 - 0.5 * L * L - li2_impl(-1.0 / y);
    }
    if (x < -0.25) {
        // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, maps [-1,-0.25] into (0, 1/2]
        const double L = std::log1p(-x);
        return -li_series(2, x / (x - 1.0)) - 0.5 * L * L;
    }
    return li_series(2, x);
}

double li3_impl(double x) {
    if (x < -1.0) {
        const double y = -x;
        const double L = std::log(y);
        return li3_impl(-1.0 / y) - L * L * L / 6.0 - pi * pi / 6.0 * L;
    }
    if (x < -0.25) {
        // Li3(x) = int_0^1 Li2(x t)/t dt has no simple Landen form; use the
        // alternating series directly, it converges at 1e-18 within ~900 terms
        // even at x = -1 thanks to the 1/k^3 weight.
        double sum = 0.0, xk = x;
        for (int k = 1; k < 20000; ++k) {
            const double t = xk / (static_cast<double>(k) * k * k);
            sum += t;
            xk *= x;
            if (std::abs(t) < 1e-18 * std::max(std::abs(sum), 1e-300)) break;
        }
        return sum;
    }
    return li_series(3, x);
}

}  // namespace

double polylog(int n, double x) {
    if (x > 0.0) throw std::domain_error("polylog: positive argument not supported");
    if (n == 2) return li2_impl(x);
    if (n == 3) return li3_impl(x);
    throw std::domain_error("polylog: order must be 2 or 3");
}

}  // namespace qdt::sf
