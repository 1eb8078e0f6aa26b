#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qdt/phys.hpp"

// Concrete 1D potential models with analytic derivatives, turning points,
// barrier-top data and the harmonic expansion of the well bottom.
namespace qdt::pot {

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluatable potential with analytic first/second derivatives. Energies in
// eV and lengths in nm for the dot models; the alpha-nucleus model uses
// MeV/fm and lives separately (see AlphaNucleusPotential).
class PotentialModel {
public:
    virtual ~PotentialModel() = default;
    virtual double eval(double x) const = 0;
    virtual double deriv(double x) const = 0;
    virtual double deriv2(double x) const = 0;
    virtual double mass_energy() const = 0;  // m c^2, eV
};

struct BarrierTop {
    double x_max;   // nm
    double v_max;   // eV
    double v_pp;    // V''(x_max), eV/nm^2, negative at a genuine top
};

struct HarmonicFit {
    double c0;      // dimensionless
    double c2;      // nm^-2
    double omega0;  // eV
    double n0;      // fractional index where E_n crosses zero
};

// V(x) = -V_w (1 - (x^2+a^2)/b^2) / (1 + exp((x^2-a^2)/Delta^2)), b in (a, sqrt(2) a).
class SmoothDoubleBarrier final : public PotentialModel {
public:
    SmoothDoubleBarrier(double a_nm, double b_nm, double delta_nm, double vw_ev,
                        phys::EffectiveMass m = phys::EffectiveMass{});
    // b defaults to the midpoint ratio (sqrt(2)+1)/2 * a
    static SmoothDoubleBarrier with_default_ratio(double a_nm, double delta_nm, double vw_ev,
                                                  phys::EffectiveMass m = phys::EffectiveMass{});

    double eval(double x) const override;
    double deriv(double x) const override;
    double deriv2(double x) const override;
    double mass_energy() const override { return mass_.energy(); }

    double a() const { return a_; }
    double b() const { return b_; }
    double delta() const { return delta_; }
    double v_w() const { return vw_; }
    const phys::EffectiveMass& mass() const { return mass_; }

private:
    double a_, b_, delta_, vw_;
    phys::EffectiveMass mass_;
};

// Square well (floor v0 < 0) flanked by rectangular barriers of height v1 on
// (a, b); zero outside.
class RectangularDoubleBarrier final : public PotentialModel {
public:
    RectangularDoubleBarrier(double a_nm, double b_nm, double v0_ev, double v1_ev,
                             phys::EffectiveMass m = phys::EffectiveMass{});
    double eval(double x) const override;
    double deriv(double) const override { return 0.0; }   // piecewise constant
    double deriv2(double) const override { return 0.0; }
    double mass_energy() const override { return mass_.energy(); }
    double a() const { return a_; }
    double b() const { return b_; }
    double v0() const { return v0_; }
    double v1() const { return v1_; }

private:
    double a_, b_, v0_, v1_;
    phys::EffectiveMass mass_;
};

// Square well of depth v0 with a linear ramp from v1 at |x|=a down to
// v1 - slope*(b-a) at |x|=b, zero outside; cusp at |x| = a.
class PartiallyLinearPotential final : public PotentialModel {
public:
    PartiallyLinearPotential(double a_nm, double b_nm, double v0_ev, double v1_ev,
                             double slope_ev_nm, phys::EffectiveMass m = phys::EffectiveMass{});
    double eval(double x) const override;
    double deriv(double x) const override;
    double deriv2(double) const override { return 0.0; }
    double mass_energy() const override { return mass_.energy(); }
    double a() const { return a_; }
    double b() const { return b_; }
    double v0() const { return v0_; }
    double v1() const { return v1_; }
    double slope() const { return slope_; }

private:
    double a_, b_, v0_, v1_, slope_;
    phys::EffectiveMass mass_;
};

// Woods-Saxon attraction plus the Coulomb potential of the matching smooth
// charge distribution. MeV / fm.
class AlphaNucleusPotential {
public:
    AlphaNucleusPotential(int A, int Z, int N);

    double woods_saxon(double r) const;        // MeV
    double coulomb(double r) const;            // MeV, polylog closed form
    double coulomb_quadrature(double r) const; // MeV, direct radial integrals (oracle route)
    double total(double r) const;              // V_WS + V_C

    int A() const { return A_; }
    int Z() const { return Z_; }
    double v0() const { return v0_; }          // MeV
    double radius() const { return R_; }       // fm
    double diffuseness() const { return aws_; }
    double c_norm() const { return c_; }       // R^3/c = int d3r v(r)

private:
    int A_, Z_, N_;
    double v0_, R_, aws_, c_;
};

// Harmonic expansion of the smooth double barrier about x = 0:
// V_c(x) = -V_w (C0 - C2 x^2), omega0 = hbar sqrt(2 V_w C2 / m),
// n0 = C0 V_w / omega0 - 1/2.
HarmonicFit harmonic_fit(const SmoothDoubleBarrier& p);

// Locate the x > 0 barrier maximum by root-finding V' and return the
// parabolic-top data.
BarrierTop barrier_top(const PotentialModel& p, double x_lo = 1e-3, double x_hi = 100.0);

// All roots of V(x) = E in [-x_span, x_span], sorted. Scan + bisection.
std::vector<double> turning_points(const PotentialModel& p, double E, double x_span = 100.0,
                                   double scan_step = 0.025);

}  // namespace qdt::pot
