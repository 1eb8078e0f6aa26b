#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdt/decayprofile.hpp"
#include "qdt/numerics.hpp"

using namespace qdt;
namespace {
constexpr double pi = std::numbers::pi;

// the reference resonance inputs (exact spectrum values as published)
dpf::DecayProfileParams ref_params() {
    const double mass = 0.1 * phys::electron_mass;
    return dpf::transition_numbers(1.16, 1.3e-5, 2.2573, 0.83, mass,
                                   (std::sqrt(2.0) + 1.0) * 2.5, 10.0, 0.6234348490, 1e9, 1.0);
}
}  // namespace

TEST_CASE("wavepacket factor: substitution, HWHM, saddle ratio") {
    dpf::WavePacket wp{1e9, 1.16};
    const double dw = wp.delta_omega();
    CHECK(dw == doctest::Approx(2.0 * pi * 1e9 * phys::hbar_ev_s).epsilon(1e-14));
    const double G = 1.3e-5;
    CHECK(dpf::wavepacket_factor(wp, 1.16, G) ==
          doctest::Approx((dw * dw / 4.0) / (dw * dw / 4.0 + G * G / 4.0)).epsilon(1e-14));
    // half maximum at |E - E*| = sqrt(dE^2 + G^2)/2
    const double f0 = dpf::wavepacket_factor(wp, 1.16, G);
    const double off = 0.5 * std::sqrt(dw * dw + G * G);
    CHECK(dpf::wavepacket_factor(wp, 1.16 + off, G) == doctest::Approx(f0 / 2.0).epsilon(1e-10));
    // ratio collapses to (dw)^2 at E_s = E*
    CHECK(dpf::wavepacket_ratio(wp, 1.16, 1.16, G) == doctest::Approx(dw * dw).epsilon(1e-14));
}

TEST_CASE("saddle: published magnitudes and limits") {
    pot::BarrierTop bt{5.9708121, 2.2573303, -0.8305682};
    const double mass = 0.1 * phys::electron_mass;
    // shift ~ 7e-8 eV (x-x_max)^2 (ps/t)^2
    const auto s = dpf::saddle(bt, mass, bt.x_max + 1.0, 1e-12);
    CHECK(s.shift == doctest::Approx(7e-8).epsilon(0.05));
    CHECK(s.shift == doctest::Approx(7.107e-8).epsilon(1e-3));  // frozen closed form
    // t -> infinity: shift -> 0, E_s -> parabolic value
    const auto s2 = dpf::saddle(bt, mass, bt.x_max + 1.0, 1.0);
    CHECK(s2.shift < 1e-20);
    CHECK(s2.e_s == doctest::Approx(bt.v_max - 0.5 * 0.8305682).epsilon(1e-9));
    // rate-units bound: (m/8) Gamma^2 (x-x_max)^2 ~ 1.1e8 1/s at Gamma = 1/ps
    const double shift_rate = dpf::saddle(bt, mass, bt.x_max + 1.0, 1e-12).shift / phys::hbar_ev_s;
    CHECK(shift_rate == doctest::Approx(1.1e8).epsilon(0.05));
    CHECK_THROWS_AS(dpf::saddle(bt, mass, bt.x_max + 1.0, 0.0), std::domain_error);
}

TEST_CASE("xi solver: published pairings and branch rule") {
    CHECK(dpf::solve_xi(9.60) == doctest::Approx(15.0185756).epsilon(1e-6));
    CHECK(dpf::solve_xi(7.72) == doctest::Approx(12.8223849).epsilon(1e-6));
    CHECK(std::exp(-dpf::solve_xi(7.72)) == doctest::Approx(2.7e-6).epsilon(0.05));
    // upper-branch root for Y = 1 (the lower root xi = 1 is excluded)
    CHECK(dpf::solve_xi(1.0) == doctest::Approx(3.5128624).epsilon(1e-6));
    // no root below the branch point
    CHECK_THROWS_AS(dpf::solve_xi(2.0 - 2.0 * std::log(2.0) - 1e-9), std::domain_error);
    CHECK_THROWS_AS(dpf::solve_xi(0.0), std::domain_error);
    // monotone and self-consistent over the working range
    double prev = 2.0;
    for (double Y = 0.7; Y <= 100.0; Y += 0.7) {
        const double xi = dpf::solve_xi(Y);
        CHECK(xi > prev);
        CHECK(xi - 2.0 * std::log(xi) == doctest::Approx(Y).epsilon(1e-12));
        prev = xi;
    }
}

TEST_CASE("transition numbers: reference inputs reproduce the published set") {
    const auto p = ref_params();
    CHECK(p.X == doctest::Approx(34.74).epsilon(0.01));       // +-1%
    CHECK(p.X == doctest::Approx(34.67777).epsilon(1e-5));    // frozen
    CHECK(std::abs(p.Y - 9.60) < 0.1);
    CHECK(p.Y == doctest::Approx(9.54122).epsilon(1e-4));     // frozen
    CHECK(std::abs(p.xi - 15.02) < 0.1);
    CHECK(p.t_p == doctest::Approx(0.76e-9).epsilon(0.05));
    CHECK(p.remnant == doctest::Approx(3.0e-7).epsilon(0.10));
    CHECK(p.k_star == doctest::Approx(std::sqrt(2.0 * 0.1 * phys::electron_mass * 1.16) /
                                      phys::hbar_c).epsilon(1e-12));
    CHECK_THROWS_AS(dpf::transition_numbers(2.5, 1.3e-5, 2.2573, 0.83,
                                            0.1 * phys::electron_mass, 6.0, 10.0, 0.62, 1e9, 1.0),
                    std::domain_error);
}

TEST_CASE("transition numbers: scale-free outputs invariant under eV -> meV") {
    const double mass = 0.1 * phys::electron_mass;
    const auto p = ref_params();
    // X and a_u-type combinations are unit-ratio expressions: recompute with
    // all energies in meV (and curvature in meV/nm^2, hbar c in meV nm)
    const double hc_mev = phys::hbar_c * 1e3;
    const double X_mev = 8.0 * pi * std::sqrt(mass * 1e3 / (0.83 * 1e3)) * (2.2573 - 1.16) * 1e3 /
                         hc_mev;
    CHECK(X_mev == doctest::Approx(p.X).epsilon(1e-10));
    const double k_mev_nm = std::sqrt(2.0 * mass * 1e3 * 1.16e3) / hc_mev;  // 1/nm
    CHECK(k_mev_nm == doctest::Approx(p.k_star).epsilon(1e-10));
    // Gamma t_p = xi is dimensionless and unit-free by construction
    CHECK(p.t_p * p.gamma_star / phys::hbar_ev_s == doctest::Approx(p.xi).epsilon(1e-12));
}

TEST_CASE("exponential amplitude: front, decay, prefactor") {
    const auto p = ref_params();
    dpf::WavePacket wp{1e9, p.e_star};
    const double b = (std::sqrt(2.0) + 1.0) * 2.5;
    const double x = b + 50.0;
    const double mass = 0.1 * phys::electron_mass;
    const double v = std::sqrt(2.0 * p.e_star / mass) * phys::speed_of_light_nm_s;
    const double t_front = (x - b) / v;
    CHECK(dpf::exp_amplitude(p, wp, b, x, 0.5 * t_front) == dpf::cplx(0.0));
    // halves every ln(2)/Gamma after the front
    const double rate = p.gamma_star / phys::hbar_ev_s;
    const double t1 = t_front + 3.0 / rate;
    const double p1 = std::norm(dpf::exp_amplitude(p, wp, b, x, t1));
    const double p2 = std::norm(dpf::exp_amplitude(p, wp, b, x, t1 + std::log(2.0) / rate));
    CHECK(p2 == doctest::Approx(0.5 * p1).epsilon(1e-10));
    // |Psi|^2 at the front carries f^2 dw^2 Gamma/(2 k* omega0)
    const double f = dpf::wavepacket_factor(wp, p.e_star, p.gamma_star);
    const double expect = f * f * p.delta_omega * p.delta_omega * p.gamma_star /
                          (2.0 * p.k_star * p.omega0);
    CHECK(std::norm(dpf::exp_amplitude(p, wp, b, x, t_front)) ==
          doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("power amplitude: 1/t^2 law, linear offset factor, theta^-2") {
    const auto p = ref_params();
    dpf::WavePacket wp{1e9, p.e_star};
    pot::BarrierTop bt{5.9708121, 2.2573303, -0.8305682};
    const double mass = 0.1 * phys::electron_mass;
    // log-log slope of |Psi|^2 over [10 t_p, 1000 t_p]
    const double t1 = 10.0 * p.t_p, t2 = 1000.0 * p.t_p;
    const double q1 = std::norm(dpf::power_amplitude(p, wp, bt, mass, bt.x_max + 1.0, t1));
    const double q2 = std::norm(dpf::power_amplitude(p, wp, bt, mass, bt.x_max + 1.0, t2));
    CHECK(std::log(q2 / q1) / std::log(t2 / t1) == doctest::Approx(-2.0).epsilon(5e-7));
    // doubling the offset doubles the probability
    const double qa = std::norm(dpf::power_amplitude(p, wp, bt, mass, bt.x_max + 1.0, t1));
    const double qb = std::norm(dpf::power_amplitude(p, wp, bt, mass, bt.x_max + 2.0, t1));
    CHECK(qb / qa == doctest::Approx(2.0).epsilon(1e-9));
    // the exponent factor is theta^-2 at E_s = E*
    const double pen = std::exp(-4.0 * pi * std::sqrt(mass / 0.8305682) *
                                (2.2573303 - p.e_star) / phys::hbar_c);
    const double direct = q1 / (pi / 2.0 *
                                std::pow(dpf::wavepacket_factor(wp, p.e_star, p.gamma_star), 2) *
                                1.0 / std::pow(t1 / phys::hbar_ev_s, 2));
    CHECK(direct == doctest::Approx(pen).epsilon(1e-9));
}

TEST_CASE("combined profile: coefficient, crossing, interference flag") {
    auto p = ref_params();
    // the published amplitude coefficient at Y = 7.72
    CHECK(std::exp(-7.72 / 2.0) == doctest::Approx(0.02105).epsilon(0.005));
    // exponential and power amplitudes cross at t_p by construction
    const double rate = p.gamma_star / phys::hbar_ev_s;
    const double ae = std::exp(-0.5 * rate * p.t_p);
    const double ap = std::exp(-p.Y / 2.0) / (rate * p.t_p);
    CHECK(ae == doctest::Approx(ap).epsilon(1e-8));

    std::vector<double> ts;
    for (int i = 0; i <= 400; ++i) ts.push_back(p.t_p * std::pow(10.0, -2.0 + 5.0 * i / 400.0));
    const auto prof = dpf::combined_profile(p, ts);
    // with the power term zeroed the profile is exactly the exponential law
    const auto pure = dpf::combined_profile(p, ts, false);
    for (size_t i = 0; i < ts.size(); ++i) {
        CHECK(pure[i].P == doctest::Approx(pure[i].exp_only).epsilon(1e-12));
        CHECK(prof[i].P > 0.0);
    }
    // remnant matches P(t_p) up to the O(1) interference factor (2 + sqrt 2)
    const auto near = dpf::combined_profile(p, {p.t_p});
    CHECK(near[0].P / p.remnant > 1.0);
    CHECK(near[0].P / p.remnant < 4.0);
    CHECK(near[0].P / p.remnant == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-6));
    // default profile carries no E* - E_s beat; enabling the shift adds one
    p.e_saddle = p.e_star + 1e-7;
    const auto osc = dpf::combined_profile(p, ts, true, true);
    double dmax = 0.0;
    for (size_t i = 0; i < ts.size(); ++i)
        dmax = std::max(dmax, std::abs(osc[i].P - prof[i].P) / prof[i].P);
    CHECK(dmax > 1e-3);
    CHECK_THROWS_AS(dpf::combined_profile(p, {1e-9, 1e-10}), std::domain_error);
}

TEST_CASE("markov ratio test") {
    const auto p = ref_params();
    const double rate = p.gamma_star / phys::hbar_ev_s;
    // pure exponential: Markov defect ~ 0 and a power fit is rejected
    std::vector<dpf::ProfilePoint> expo;
    for (int i = 1; i <= 200; ++i) {
        const double t = i * 0.05 / rate;
        expo.push_back({t, std::exp(-rate * t), std::exp(-rate * t), 0.0});
    }
    const auto ms = dpf::markov_ratio_test(expo, expo.front().t, expo.back().t, 0.0);
    CHECK(ms.markov_defect < 1e-9);
    CHECK(ms.p_resid > 0.1);  // power-law hypothesis rejected
    // pure t^-2 with t_p = 0
    std::vector<dpf::ProfilePoint> pw;
    for (int i = 1; i <= 200; ++i) {
        const double t = 1e-9 * std::pow(10.0, 3.0 * i / 200.0);
        pw.push_back({t, 1.0 / (t * t), 0.0, 1.0 / (t * t)});
    }
    const auto mp = dpf::markov_ratio_test(pw, pw.front().t, pw.back().t, 0.0);
    CHECK(mp.p_hat == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(mp.p_resid < 1e-10);
    // combined profile on [5 t_p, 50 t_p]; the module's power term decays in
    // absolute time, so the estimator runs with zero onset subtraction
    std::vector<double> ts;
    for (int i = 0; i <= 300; ++i) ts.push_back(p.t_p * (4.0 + 50.0 * i / 300.0));
    const auto prof = dpf::combined_profile(p, ts);
    const auto mc = dpf::markov_ratio_test(prof, 5.0 * p.t_p, 50.0 * p.t_p, 0.0);
    CHECK(mc.p_hat == doctest::Approx(2.0).epsilon(0.05));
    CHECK(mc.p_resid < 0.01);
    // non-positive P -> data error
    std::vector<dpf::ProfilePoint> bad = pw;
    bad[5].P = 0.0;
    CHECK_THROWS_AS(dpf::markov_ratio_test(bad, bad.front().t, bad.back().t, 0.0),
                    std::domain_error);
}
