#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qdt/potentials.hpp"

using namespace qdt;

namespace {
pot::SmoothDoubleBarrier fig_set() {
    return pot::SmoothDoubleBarrier::with_default_ratio(5.0, 4.0, 10.0, phys::EffectiveMass(0.1));
}
}  // namespace

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(pot::SmoothDoubleBarrier(5.0, 5.0, 4.0, 10.0), std::domain_error);   // b = a
    CHECK_THROWS_AS(pot::SmoothDoubleBarrier(5.0, 7.2, 4.0, 10.0), std::domain_error);   // b > sqrt2 a
    CHECK_THROWS_AS(pot::SmoothDoubleBarrier(5.0, 6.0, -1.0, 10.0), std::domain_error);  // Delta < 0
    CHECK_THROWS_AS(pot::SmoothDoubleBarrier(5.0, 6.0, 4.0, -10.0), std::domain_error);
    CHECK_THROWS_AS(pot::RectangularDoubleBarrier(3.0, 2.0, -2.0, 3.0), std::domain_error);
    CHECK_THROWS_AS(pot::AlphaNucleusPotential(212, 84, 120), std::domain_error);
}

TEST_CASE("reference dot: extrema match the published set") {
    const auto p = fig_set();
    CHECK(p.eval(0.0) == doctest::Approx(-2.5935).epsilon(2e-4));
    CHECK(p.eval(0.0) == doctest::Approx(-2.593465160109).epsilon(1e-10));  // frozen
    const auto bt = pot::barrier_top(p);
    CHECK(bt.v_max == doctest::Approx(2.2573).epsilon(5e-4));
    CHECK(bt.v_max == doctest::Approx(2.257330279626).epsilon(1e-9));       // frozen
    CHECK(std::abs(bt.v_pp) == doctest::Approx(0.83).epsilon(0.013));
    CHECK(std::abs(bt.v_pp) == doctest::Approx(0.830568182514).epsilon(1e-8));
    CHECK(bt.x_max == doctest::Approx(5.970812145279).epsilon(1e-9));
    CHECK(p.eval(bt.x_max) == doctest::Approx(bt.v_max).epsilon(1e-12));
}

TEST_CASE("symmetry and decay at infinity") {
    const auto p = fig_set();
    CHECK(p.eval(1.234) == p.eval(-1.234));
    CHECK(std::abs(p.eval(100.0)) < 1e-8);
    CHECK(std::abs(p.eval(40.0)) < 1e-8);
}

TEST_CASE("analytic derivatives match central differences for every model") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> U(-12.0, 12.0);
    const auto p = fig_set();
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        const double x = U(rng);
        const double d1 = (p.eval(x + h) - p.eval(x - h)) / (2.0 * h);
        const double s1 = std::max(std::abs(d1), 1e-3);
        CHECK(std::abs(p.deriv(x) - d1) / s1 < 1e-6);
        // second difference at a larger step (h = 1e-5 drowns it in roundoff)
        const double h2 = 1e-3;
        const double d2 = (p.eval(x + h2) - 2.0 * p.eval(x) + p.eval(x - h2)) / (h2 * h2);
        const double s2 = std::max(std::abs(d2), 1e-2);
        CHECK(std::abs(p.deriv2(x) - d2) / s2 < 1e-4);
    }
    // ramp: away from the cusp and the edges
    const pot::PartiallyLinearPotential ramp(5.0, 7.0, 20.0, 20.0, 10.0);
    for (double x : {5.5, 6.0, 6.5, -5.5, -6.4}) {
        const double d1 = (ramp.eval(x + h) - ramp.eval(x - h)) / (2.0 * h);
        CHECK(ramp.deriv(x) == doctest::Approx(d1).epsilon(1e-8));
    }
}

TEST_CASE("harmonic fit: coefficients, frequency, fractional index") {
    const auto p = fig_set();
    const auto hf = pot::harmonic_fit(p);
    CHECK(hf.c0 * p.v_w() == doctest::Approx(2.593465160109).epsilon(1e-10));
    CHECK(hf.c2 == doctest::Approx(0.0255034669).epsilon(1e-7));            // frozen Taylor value
    CHECK(hf.omega0 == doctest::Approx(0.6234348490).epsilon(1e-8));        // frozen
    CHECK(hf.n0 == doctest::Approx(3.6599618).epsilon(1e-6));               // frozen
    // the two closed forms are one identity: omega0 = hbar sqrt(2 Vw C2/m)
    const double om = phys::hbar_c * std::sqrt(2.0 * p.v_w() * hf.c2 / p.mass_energy());
    CHECK(hf.omega0 == doctest::Approx(om).epsilon(1e-10));
    CHECK(hf.n0 == doctest::Approx(hf.c0 * p.v_w() / hf.omega0 - 0.5).epsilon(1e-12));
}

TEST_CASE("harmonic fit agrees with eval to second order near the origin") {
    const auto p = fig_set();
    const auto hf = pot::harmonic_fit(p);
    const auto vc = [&](double x) { return -p.v_w() * (hf.c0 - hf.c2 * x * x); };
    const double x_ref = 0.1 * p.a();
    const double K = std::abs(p.eval(x_ref) - vc(x_ref)) / std::pow(x_ref, 4);
    for (double x = 0.05; x <= x_ref + 1e-12; x += 0.05) {
        CHECK(std::abs(p.eval(x) - vc(x)) <= 1.1 * K * std::pow(x, 4));
    }
}

namespace {
// pure parabola about x0 > 0 for the barrier_top identity
struct Parabola final : pot::PotentialModel {
    double v1, k, x0;
    Parabola(double v1_, double k_, double x0_) : v1(v1_), k(k_), x0(x0_) {}
    double eval(double x) const override { return v1 - 0.5 * k * (x - x0) * (x - x0); }
    double deriv(double x) const override { return -k * (x - x0); }
    double deriv2(double) const override { return -k; }
    double mass_energy() const override { return 0.1 * phys::electron_mass; }
};
}  // namespace

TEST_CASE("barrier_top on a pure parabola is exact") {
    const Parabola p(1.5, 0.7, 2.0);
    const auto bt = pot::barrier_top(p, 0.5, 10.0);
    CHECK(bt.x_max == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(bt.v_max == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(bt.v_pp == doctest::Approx(-0.7).epsilon(1e-12));
    // no interior maximum -> shape error
    const pot::RectangularDoubleBarrier flat(2.0, 3.0, -1.0, 2.0);
    CHECK_THROWS_AS(pot::barrier_top(flat), pot::ShapeError);
}

TEST_CASE("turning points: counts, symmetry, degenerate top") {
    const auto p = fig_set();
    const auto bt = pot::barrier_top(p);
    const auto four = pot::turning_points(p, 1.16);
    REQUIRE(four.size() == 4);
    CHECK(four[0] == doctest::Approx(-four[3]).epsilon(1e-9));
    CHECK(four[1] == doctest::Approx(-four[2]).epsilon(1e-9));
    // near-degenerate pair at the top: both positive roots collapse onto
    // x_max like sqrt(2 dE/|V''|) as E -> V_max
    const double dE = 1e-5;
    const auto deg = pot::turning_points(p, bt.v_max - dE, 100.0, 2e-4);
    REQUIRE(deg.size() == 4);
    const double half = std::sqrt(2.0 * dE / std::abs(bt.v_pp));
    CHECK(std::abs(deg[2] - bt.x_max) < 1.1 * half);
    CHECK(std::abs(deg[3] - bt.x_max) < 1.1 * half);
    CHECK(deg[3] - deg[2] == doctest::Approx(2.0 * half).epsilon(0.01));
    // bound energy: two points
    CHECK(pot::turning_points(p, -1.0).size() == 2);
    // above the barrier: none
    CHECK(pot::turning_points(p, 3.0).empty());
    // rectangular steps at +-a, +-b
    const pot::RectangularDoubleBarrier r(2.0, 3.5, -2.0, 3.0);
    const auto tr = pot::turning_points(r, 0.0);
    REQUIRE(tr.size() == 4);
    CHECK(tr[2] == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(tr[3] == doctest::Approx(3.5).epsilon(1e-8));
}

TEST_CASE("alpha-nucleus potential: normalization and Coulomb routes") {
    const pot::AlphaNucleusPotential ap(212, 84, 128);
    CHECK(ap.v0() == doctest::Approx(51.0 - 33.0 * 44.0 / 212.0).epsilon(1e-12));
    CHECK(ap.radius() == doctest::Approx(1.27 * std::cbrt(212.0)).epsilon(1e-12));
    CHECK(ap.c_norm() == doctest::Approx(0.2216).epsilon(0.0045));  // published 1/0.2216
    CHECK(ap.c_norm() == doctest::Approx(0.221611).epsilon(1e-4));  // frozen

    // normalization integral reproduced by an independent Simpson oracle
    const double R = ap.radius(), aws = ap.diffuseness();
    const double inv_c = 2.0 * std::numbers::pi *
                         oracle::simpson(
                             [&](double x) {
                                 return x * x * (1.0 - std::tanh(R / (2.0 * aws) * (x - 1.0)));
                             },
                             0.0, 60.0, 200000);
    CHECK(1.0 / ap.c_norm() == doctest::Approx(inv_c).epsilon(1e-10));

    // closed form vs direct quadrature of the charge integral
    for (double r : {0.5 * R, R, 2.0 * R}) {
        CHECK(ap.coulomb(r) == doctest::Approx(ap.coulomb_quadrature(r)).epsilon(1e-6));
    }
    // continuity and finiteness at the surface
    CHECK(std::isfinite(ap.coulomb(R)));
    CHECK(ap.coulomb(R - 1e-9) == doctest::Approx(ap.coulomb(R + 1e-9)).epsilon(1e-8));

    // Gauss limit: r V_C -> 2 (Z-2) alpha hbar c
    const double lim = 2.0 * (84 - 2) * phys::coulomb_e2;
    CHECK(200.0 * ap.coulomb(200.0) == doctest::Approx(lim).epsilon(1e-3));
    CHECK_THROWS_AS(ap.coulomb(0.0), std::domain_error);
    CHECK_THROWS_AS(ap.woods_saxon(-1.0), std::domain_error);
}
